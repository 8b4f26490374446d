// permlab: command-line front end. Exit codes: 0 success, 1 domain or
// parse error (including a failed verify), 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "permlab/bijections.hpp"
#include "permlab/distributions.hpp"
#include "permlab/dyck.hpp"
#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"
#include "permlab/permutation.hpp"
#include "permlab/serialize.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"
#include "permlab/verify.hpp"

using namespace permlab;

namespace {

struct Global {
  std::string format = "json";
  bool pretty = false;
  unsigned jobs = 0;
};

unsigned effective_jobs(const Global& g) {
  if (g.jobs > 0) return g.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit_json(const Global& g, const Json& j) {
  std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
}

void emit_csv(const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) std::cout << csv_row(r) << "\n";
}

Json poly_record(const MultiPoly& p) {
  return {{"poly", to_json(p)}, {"pretty", p.pretty()}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// --- stats ----------------------------------------------------------------

void run_stats(const Global& g, const std::string& text) {
  const auto p = Permutation::parse(text);
  const auto s = statistics(p);
  if (g.format == "csv") {
    emit_csv({{"fp", "exc", "crs", "nes", "inv", "maj"},
              {std::to_string(s.fp), std::to_string(s.exc), std::to_string(s.crs),
               std::to_string(s.nes), std::to_string(s.inv), std::to_string(s.maj)}});
    return;
  }
  Json arcs = Json::array();
  for (const auto& a : arc_pairs(p)) arcs.push_back(to_json(a));
  Json out = {{"permutation", p.to_string()}};
  out.update(to_json(s));
  out["arcs"] = arcs;
  emit_json(g, out);
}

// --- apply ----------------------------------------------------------------

void run_apply(const Global& g, const std::string& map, const std::string& text, bool trace) {
  if (trace && map != "theta" && map != "gamma") {
    throw UsageError("--trace is available for theta and gamma only");
  }
  std::string image;
  Json trace_json = Json::array();
  std::vector<std::vector<std::string>> trace_rows;
  if (map == "phi-inv") {
    image = phi_inv(DyckPath::parse(text)).to_string();
  } else {
    const auto p = Permutation::parse(text);
    if (map == "theta") {
      ThetaTrace t;
      image = theta_recursive(p, &t).to_string();
      trace_json = to_json(t);
      trace_rows.push_back({"l", "reduced_prefix", "position", "value", "image"});
      for (const auto& row : t) {
        trace_rows.push_back({std::to_string(row.l), row.reduced_prefix.to_string(),
                              row.insertion ? std::to_string(row.insertion->first) : "",
                              row.insertion ? std::to_string(row.insertion->second) : "",
                              row.image.to_string()});
      }
    } else if (map == "gamma") {
      GammaTrace t;
      image = gamma(p, &t).to_string();
      trace_rows.push_back({"step", "permutation"});
      for (std::size_t i = 0; i < t.size(); ++i) {
        trace_json.push_back(t[i].to_string());
        trace_rows.push_back({std::to_string(i), t[i].to_string()});
      }
    } else if (map == "theta-inv") {
      image = theta_inverse(p).to_string();
    } else if (map == "r") {
      image = reverse(p).to_string();
    } else if (map == "c") {
      image = complement(p).to_string();
    } else if (map == "i") {
      image = inverse(p).to_string();
    } else if (map == "rc") {
      image = reverse_complement(p).to_string();
    } else if (map == "rci") {
      image = reverse_complement_inverse(p).to_string();
    } else if (map == "psi") {
      image = psi(p).to_string();
    } else {
      throw UsageError("unknown map '" + map + "'");
    }
  }
  if (g.format == "csv") {
    if (trace) {
      emit_csv(trace_rows);
    } else {
      emit_csv({{"map", "input", "image"}, {map, text, image}});
    }
    return;
  }
  Json out = {{"map", map}, {"input", text}, {"image", image}};
  if (trace) out["trace"] = trace_json;
  emit_json(g, out);
}

// --- dist -----------------------------------------------------------------

void run_dist(const Global& g, std::size_t n, const std::string& avoid, const std::string& stats_text,
              const std::string& vars_text) {
  const auto patterns = avoid.empty() ? std::vector<Permutation>{} : parse_pattern_list(avoid);
  const auto stats = parse_stat_list(stats_text);
  const auto vars = parse_var_map(vars_text, stats);
  const auto poly = distribution(n, patterns, vars, effective_jobs(g));
  if (g.format == "csv") {
    std::cout << poly_to_csv(poly);
    return;
  }
  if (g.pretty) {
    std::cout << poly.pretty() << "\n";
    return;
  }
  Json avoid_json = Json::array();
  for (const auto& p : patterns) avoid_json.push_back(p.to_compact());
  Json var_json = Json::object();
  for (const auto& sv : vars) var_json[std::string(stat_name(sv.stat))] = sv.var;
  Json out = {{"n", n}, {"avoid", avoid_json}, {"vars", var_json}};
  out.update(poly_record(poly));
  emit_json(g, out);
}

// --- wilf -----------------------------------------------------------------

void run_wilf(const Global& g, std::size_t n_max, const std::string& patterns_text,
              const std::string& stats_text) {
  const auto patterns = parse_pattern_list(patterns_text);
  const auto stats = parse_stat_list(stats_text);
  if (stats.empty()) throw UsageError("wilf: --stats must name at least one statistic");
  const auto report = wilf_partition(patterns, stats, n_max, effective_jobs(g));
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"class", "pattern"}};
    const auto part = report.partition();
    for (std::size_t c = 0; c < part.size(); ++c) {
      for (const auto& p : part[c]) rows.push_back({std::to_string(c + 1), p});
    }
    emit_csv(rows);
    return;
  }
  if (g.pretty) {
    for (const auto& cls : report.partition()) std::cout << "{" << join(cls, ",") << "}\n";
    return;
  }
  emit_json(g, to_json(report));
}

// --- catalan --------------------------------------------------------------

void run_catalan(const Global& g, std::size_t n, const std::string& mode) {
  MultiPoly poly;
  if (mode == "recurrence") {
    poly = catalan_qp(n).poly;
  } else if (mode == "cfrac") {
    poly = cfrac_series(qp_catalan_ladder(), n)[n];
  } else {
    const Permutation p321{3, 2, 1};
    const VarMap vars{{Stat::exc, "q"}, {Stat::crs, "p"}};
    poly = distribution(n, std::span<const Permutation>(&p321, 1), vars, effective_jobs(g));
  }
  poly = poly.with_vars({"q", "p"});
  if (g.format == "csv") {
    std::cout << poly_to_csv(poly);
    return;
  }
  if (g.pretty) {
    std::cout << poly.pretty() << "\n";
    return;
  }
  Json out = {{"n", n}, {"mode", mode}};
  out.update(poly_record(poly));
  emit_json(g, out);
}

// --- dyck -----------------------------------------------------------------

void run_dyck_tunnels(const Global& g, const std::string& word) {
  const auto d = DyckPath::parse(word);
  const auto counts = tunnel_counts(d);
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"up_index", "down_index", "midpoint_x2", "side"}};
    for (const auto& t : tunnels(d)) {
      rows.push_back({std::to_string(t.up_index), std::to_string(t.down_index),
                      std::to_string(t.midpoint_x2), std::string(tunnel_side_name(t.side))});
    }
    emit_csv(rows);
    return;
  }
  Json ts = Json::array();
  for (const auto& t : tunnels(d)) ts.push_back(to_json(t));
  emit_json(g, {{"path", d.to_string()},
                {"lt", counts.left},
                {"ct", counts.centered},
                {"rt", counts.right},
                {"tunnels", ts}});
}

std::string steps_text(const std::vector<Step>& s) {
  std::string out;
  for (Step x : s) out += static_cast<char>(x);
  return out;
}

void run_dyck_multitunnels(const Global& g, const std::string& word) {
  const auto d = DyckPath::parse(word);
  const auto splits = centered_multitunnels(d);
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"outer", "a", "b", "c"}};
    for (const auto& s : splits) {
      rows.push_back({std::to_string(s.outer), steps_text(s.a), steps_text(s.b), steps_text(s.c)});
    }
    emit_csv(rows);
    return;
  }
  Json list = Json::array();
  for (const auto& s : splits) {
    list.push_back({{"outer", s.outer}, {"a", steps_text(s.a)}, {"b", steps_text(s.b)},
                    {"c", steps_text(s.c)}});
  }
  emit_json(g, {{"path", d.to_string()}, {"count", splits.size()}, {"multitunnels", list}});
}

void run_dyck_convert(const Global& g, const std::string& path, const std::string& perm) {
  if (g.format == "csv") {
    emit_csv({{"path", "permutation"}, {path, perm}});
    return;
  }
  emit_json(g, {{"path", path}, {"permutation", perm}});
}

// --- verify ---------------------------------------------------------------

int run_verify(const Global& g, std::size_t n_max) {
  SuiteOptions opts;
  opts.n_max = n_max;
  opts.jobs = effective_jobs(g);
  const auto results = run_identity_suite(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"check", "n", "cases", "failures", "status", "detail"}};
    for (const auto& r : results) {
      rows.push_back({r.name, std::to_string(r.n), std::to_string(r.cases), std::to_string(r.failures),
                      r.passed ? "pass" : "FAIL", r.detail});
    }
    emit_csv(rows);
  } else if (g.pretty) {
    for (const auto& r : results) {
      std::cout << (r.passed ? "pass  " : "FAIL  ") << r.name << "  n<=" << r.n << "  cases=" << r.cases;
      if (!r.passed) std::cout << "  failures=" << r.failures << "  first: " << r.detail;
      std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
  } else {
    Json checks = Json::array();
    for (const auto& r : results) {
      checks.push_back({{"check", r.name},
                        {"n", r.n},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"passed", r.passed},
                        {"detail", r.detail}});
    }
    emit_json(g, {{"n_max", n_max}, {"passed", all}, {"checks", checks}});
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics, pattern avoidance, Dyck paths and bijections"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--pretty", g.pretty, "Human-readable polynomials and indented JSON");
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration (default: all cores)")
      ->envname("PERMLAB_JOBS")
      ->check(CLI::Range(1u, 1024u));

  std::string perm_text, map_name, word;
  bool trace = false;

  auto* stats_cmd = app.add_subcommand("stats", "Statistics and crossing/nesting pairs of a permutation");
  stats_cmd->add_option("perm", perm_text, "Permutation, e.g. \"4 1 6 2 7 3 5\"")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply a map to a permutation (phi-inv takes a Dyck word)");
  apply_cmd->add_option("map", map_name, "Map name")
      ->required()
      ->check(CLI::IsMember({"theta", "theta-inv", "gamma", "r", "c", "i", "rc", "rci", "psi", "phi-inv"}));
  apply_cmd->add_option("perm", perm_text, "Argument")->required();
  apply_cmd->add_flag("--trace", trace, "Include the step-by-step trace (theta, gamma)");

  std::size_t n = 0;
  std::string avoid, stats_list, vars_map;
  auto* dist_cmd = app.add_subcommand("dist", "Joint distribution polynomial over S_n(T)");
  dist_cmd->add_option("--n", n, "Permutation length")->required();
  dist_cmd->add_option("--avoid", avoid, "Patterns to avoid, e.g. 123,132");
  dist_cmd->add_option("--stats", stats_list, "Statistics among fp,exc,crs,nes,inv,maj");
  dist_cmd->add_option("--vars", vars_map, "Variable overrides, e.g. crs=p,exc=q");

  std::size_t n_max = 0;
  std::string patterns_text;
  auto* wilf_cmd = app.add_subcommand("wilf", "Partition patterns by equal joint distributions");
  wilf_cmd->add_option("--n-max", n_max, "Largest n compared")->required();
  wilf_cmd->add_option("--patterns", patterns_text, "Patterns, e.g. 123,132,213")->required();
  wilf_cmd->add_option("--stats", stats_list, "Statistics")->required();

  std::string mode = "recurrence";
  auto* cat_cmd = app.add_subcommand("catalan", "q,p-Catalan polynomial C_n(q,p)");
  cat_cmd->add_option("--n", n, "Index")->required();
  cat_cmd->add_option("--mode", mode, "Computation route")
      ->check(CLI::IsMember({"recurrence", "cfrac", "enumerate"}))
      ->capture_default_str();

  auto* dyck_cmd = app.add_subcommand("dyck", "Dyck path tools");
  dyck_cmd->require_subcommand(1);
  auto* tunnels_cmd = dyck_cmd->add_subcommand("tunnels", "Tunnels and their sides");
  tunnels_cmd->add_option("word", word, "Dyck word over u/d")->required();
  auto* to_perm_cmd = dyck_cmd->add_subcommand("to-perm", "Dyck path -> 132-avoiding permutation");
  to_perm_cmd->add_option("word", word, "Dyck word over u/d")->required();
  auto* from_perm_cmd = dyck_cmd->add_subcommand("from-perm", "321-avoiding permutation -> Dyck path");
  from_perm_cmd->add_option("perm", perm_text, "Permutation")->required();
  auto* multi_cmd = dyck_cmd->add_subcommand("multitunnels", "Centered multitunnels");
  multi_cmd->add_option("word", word, "Dyck word over u/d")->required();

  std::size_t verify_n = 7;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite and print a pass/fail table");
  verify_cmd->add_option("--n-max", verify_n, "Size bound for exhaustive checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*stats_cmd) {
      run_stats(g, perm_text);
    } else if (*apply_cmd) {
      run_apply(g, map_name, perm_text, trace);
    } else if (*dist_cmd) {
      run_dist(g, n, avoid, stats_list, vars_map);
    } else if (*wilf_cmd) {
      run_wilf(g, n_max, patterns_text, stats_list);
    } else if (*cat_cmd) {
      run_catalan(g, n, mode);
    } else if (*tunnels_cmd) {
      run_dyck_tunnels(g, word);
    } else if (*to_perm_cmd) {
      const auto d = DyckPath::parse(word);
      run_dyck_convert(g, d.to_string(), phi_inv(d).to_string());
    } else if (*from_perm_cmd) {
      const auto p = Permutation::parse(perm_text);
      run_dyck_convert(g, psi(p).to_string(), p.to_string());
    } else if (*multi_cmd) {
      run_dyck_multitunnels(g, word);
    } else if (*verify_cmd) {
      return run_verify(g, verify_n);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
