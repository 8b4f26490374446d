// Acceptance suite. One line per criterion; exit status is the number of
// failed criteria. Every criterion is exact (no numeric tolerance); the
// runtime limits below are wall-clock seconds.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/bijections.hpp"
#include "permlab/distributions.hpp"
#include "permlab/dyck.hpp"
#include "permlab/patterns.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"
#include "permlab/verify.hpp"

#ifndef PERMLAB_CLI_PATH
#error "PERMLAB_CLI_PATH must name the permlab executable"
#endif

using namespace permlab;

namespace {

// Collects mismatches for one criterion.
struct Probe {
  std::vector<std::string> misses;
  void expect(bool ok, const std::string& what) {
    if (!ok) misses.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Probe&)> body;
};

std::string run_cli(const std::string& args, int* code = nullptr) {
  const std::string cmd = std::string("'") + PERMLAB_CLI_PATH + "' " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (code) *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Permutation P(std::string_view s) { return Permutation::parse(s); }

std::vector<Permutation> only(const char* t) { return parse_pattern_list(t); }

bool same_fp_exc_crs(const Permutation& a, const Permutation& b) {
  const auto s = statistics(a), t = statistics(b);
  return s.fp == t.fp && s.exc == t.exc && s.crs == t.crs;
}

const std::vector<Permutation> kS3 = parse_pattern_list("123,132,213,231,312,321");

using Partition = std::vector<std::vector<std::string>>;

std::string show(const Partition& p) {
  std::string out;
  for (const auto& cls : p) {
    out += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + cls[i];
    out += "}";
  }
  return out;
}

// The class of `member` in `part`, or empty.
std::vector<std::string> class_of(const Partition& part, const std::string& member) {
  for (const auto& cls : part) {
    for (const auto& m : cls) {
      if (m == member) return cls;
    }
  }
  return {};
}

// --- criteria -------------------------------------------------------------

void pattern_table(Probe& pr) {
  struct Cell {
    const char* pattern;
    const char* stat;
    const char* expected;
  };
  const std::vector<Cell> cells = {
      {"123", "crs", "7+6x+x²"}, {"123", "nes", "4+8x+2x²"},
      {"132", "crs", "8+4x+2x²"}, {"132", "nes", "7+5x+2x²"},
      {"213", "crs", "8+4x+2x²"}, {"213", "nes", "7+5x+2x²"},
      {"321", "crs", "8+4x+2x²"}, {"321", "nes", "14"},
      {"231", "crs", "8+5x+x²"}, {"231", "nes", "8+5x+x²"},
      {"312", "crs", "13+x"},     {"312", "nes", "8+5x+x²"},
  };
  for (const auto& c : cells) {
    const auto got = run_cli(std::string("--pretty dist --n 4 --avoid ") + c.pattern +
                             " --stats " + c.stat);
    pr.expect(got == std::string(c.expected) + "\n",
              std::string(c.pattern) + "/" + c.stat + " gave '" + got + "'");
  }
}

void theta_trace(Probe& pr) {
  int code = -1;
  const auto out = run_cli("apply theta '4 1 6 2 7 3 5' --trace", &code);
  pr.expect(code == 0, "exit code " + std::to_string(code));
  if (code != 0) return;
  const auto j = nlohmann::json::parse(out);
  const std::vector<std::pair<int, int>> want = {{2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 1}, {4, 2}};
  std::vector<std::pair<int, int>> got;
  for (const auto& row : j["trace"]) {
    if (!row["insertion"].is_null()) got.emplace_back(row["insertion"][0], row["insertion"][1]);
  }
  pr.expect(got == want, "insertion pairs differ");
  pr.expect(j["image"] == "7 6 5 2 1 3 4", "image " + j["image"].dump());
}

void theta_bijection(Probe& pr) {
  const auto p132 = only("132");
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto dom = enumerate_avoiders(n, only("321"));
    const auto cod = enumerate_avoiders(n, p132);
    std::set<Permutation> image;
    for (const auto& s : dom) {
      const auto t = theta_recursive(s);
      image.insert(t);
      pr.expect(same_fp_exc_crs(s, t), "statistics differ at " + s.to_string());
    }
    pr.expect(image == std::set<Permutation>(cod.begin(), cod.end()),
              "image is not S_" + std::to_string(n) + "(132)");
    pr.expect(image.size() == dom.size(), "not injective at n=" + std::to_string(n));
    if (n == 9) pr.expect(dom.size() == 4862 && cod.size() == 4862, "|S_9| sides");
  }
}

void theta_forms(Probe& pr) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_avoider(n, only("321"), [&](const Permutation& s) {
      const auto a = theta_recursive(s);
      pr.expect(a == theta_composed(s), "recursive vs composed at " + s.to_string());
      pr.expect(a == phi_inv(psi(s)), "recursive vs phi_inv(psi) at " + s.to_string());
      pr.expect(theta_inverse(a) == s, "inverse at " + s.to_string());
    });
  }
}

void gamma_identity(Probe& pr) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_avoider(n, only("321"), [&](const Permutation& s) {
      const auto g = gamma(s);
      pr.expect(g == theta_composed(reverse_complement_inverse(s)), "gamma at " + s.to_string());
      pr.expect(same_fp_exc_crs(s, g), "gamma statistics at " + s.to_string());
    });
  }
  GammaTrace chain;
  pr.expect(gamma(P("4 1 6 2 7 3 5"), &chain) == P("6 5 7 3 2 1 4"), "gamma(4162735)");
  const std::set<Permutation> steps(chain.begin(), chain.end());
  pr.expect(steps.count(P("6 5 2 1 7 3 4")) == 1, "chain misses 6521734");
  pr.expect(steps.count(P("6 5 7 1 3 2 4")) == 1, "chain misses 6571324");
}

void single_stat_partitions(Probe& pr) {
  const auto check = [&](std::vector<Stat> stats, const Partition& want) {
    const auto got = wilf_partition(kS3, stats, 8, 4).partition();
    pr.expect(got == want, "got " + show(got));
  };
  check({Stat::nes}, {{"123"}, {"132", "213"}, {"231", "312"}, {"321"}});
  check({Stat::crs}, {{"123"}, {"132", "213", "321"}, {"231"}, {"312"}});
  check({Stat::crs, Stat::nes}, {{"123"}, {"132", "213"}, {"231"}, {"312"}, {"321"}});
}

void extended_partitions(Probe& pr) {
  const auto check = [&](std::vector<Stat> stats, const std::string& member,
                         const std::vector<std::string>& want) {
    const auto part = wilf_partition(kS3, stats, 7, 4).partition();
    pr.expect(class_of(part, member) == want, "got " + show(part));
  };
  check({Stat::fp, Stat::exc, Stat::inv, Stat::crs, Stat::nes}, "132", {"132", "213"});
  for (const char* single : {"123", "231", "312", "321"}) {
    check({Stat::fp, Stat::exc, Stat::inv, Stat::crs, Stat::nes}, single, {single});
  }
  check({Stat::fp, Stat::inv, Stat::nes}, "231", {"231", "312"});
  check({Stat::fp, Stat::exc, Stat::crs}, "132", {"132", "213", "321"});
}

void catalan_identities(Probe& pr) {
  const VarMap qp{{Stat::exc, "q"}, {Stat::crs, "p"}};
  const auto series = cfrac_series(qp_catalan_ladder(), 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto c = catalan_qp(n).poly;
    pr.expect(distribution(n, only("321"), qp, 4) == c, "enumeration at n=" + std::to_string(n));
    pr.expect(series[n] == c, "cfrac at n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 9; ++n) {
    pr.expect(inv_dist_check(n, 4).equal, "inversions at n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<Permutation> nn;
    for_each_avoider(n, {}, [&](const Permutation& p) {
      if (is_nonnesting(p)) nn.insert(p);
    });
    const auto av = enumerate_avoiders(n, only("321"));
    pr.expect(nn == std::set<Permutation>(av.begin(), av.end()),
              "nonnesting set at n=" + std::to_string(n));
  }
}

void crs_nes_identities(Probe& pr) {
  const VarMap xy{{Stat::crs, "x"}, {Stat::nes, "y"}};
  const auto series = cfrac_series(crs_nes_ladder(), 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto d = distribution(n, {}, xy, 4);
    pr.expect(d == d.renamed({{"x", "y"}, {"y", "x"}}), "asymmetric at n=" + std::to_string(n));
    pr.expect(series[n] == d, "cfrac at n=" + std::to_string(n));
  }
}

void structure_lemmas(Probe& pr) {
  static const char* const kChecks[] = {
      "insertion-crossing-delta",  "fixed-point-shift",       "half-balance",
      "phi-inv-structure",         "t-set-structure",         "sum-product-algebra",
      "crossing-additivity",       "theta-sum-to-product",    "irreducibility",
      "prefix-arc-structure",      "irreducible-insertion-delta",
      "irreducible-insertion-delta-values",
      "psi-sum-to-odot",           "odot-to-product",         "component-counts",
  };
  SuiteOptions o;
  o.n_max = 64;  // each check then runs at its own stated bound
  o.jobs = 4;
  for (const char* name : kChecks) {
    const auto r = run_check(name, o);
    pr.expect(r.passed, std::string(name) + " n<=" + std::to_string(r.n) + ": " +
                            std::to_string(r.failures) + " failures, first " + r.detail);
  }
}

void golden_values(Probe& pr) {
  const auto fig = statistics(P("4 6 2 9 8 1 7 10 3 5"));
  pr.expect(fig.crs == 9, "crs(4 6 2 9 8 1 7 10 3 5) = " + std::to_string(fig.crs) + ", want 9");
  pr.expect(fig.nes == 4, "nes = " + std::to_string(fig.nes) + ", want 4");

  const auto d = DyckPath::parse("ududuuuddudduudd");
  pr.expect(tunnel_counts(d) == TunnelCounts{4, 1, 3}, "tunnel counts");

  const auto t = rsk(P("2 4 1 3 5 8 6 7"));
  using Rows = std::vector<std::vector<int>>;
  pr.expect(t.p.rows == Rows{{1, 3, 5, 6, 7}, {2, 4, 8}}, "P tableau");
  pr.expect(t.q.rows == Rows{{1, 2, 5, 6, 8}, {3, 4, 7}}, "Q tableau");

  pr.expect(phi_inv(d) == P("7 8 5 3 4 6 2 1"), "phi_inv image");
  pr.expect(matching(P("2 4 1 3 5 8 6 7")) == Matching{{2, 3}, {4, 4}, {8, 7}}, "matching");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "n=4 crs and nes polynomials for every length-3 pattern (CLI)", 1, pattern_table},
      {2, "theta insertion trace of 4 1 6 2 7 3 5 (CLI)", 1, theta_trace},
      {3, "theta: S_n(321) -> S_n(132) bijective, (fp,exc,crs) kept, n<=9", 60, theta_bijection},
      {4, "recursive theta = composed theta = phi_inv o psi; inverse, S_8(321)", 30, theta_forms},
      {5, "gamma = theta o rci on S_8(321); gamma chain of 4 1 6 2 7 3 5", 30, gamma_identity},
      {6, "Wilf partitions for nes, crs, (crs,nes), n<=8", 60, single_stat_partitions},
      {7, "Wilf classes for extended statistic tuples, n<=7", 60, extended_partitions},
      {8, "q,p-Catalan: enumeration, continued fraction, inversions, nonnesting", 120,
       catalan_identities},
      {9, "crs/nes symmetry and continued fraction on S_n, n<=8", 60, crs_nes_identities},
      {10, "structure lemmas at their stated bounds", 120, structure_lemmas},
      {11, "golden values: arc counts, tunnels, RSK, phi_inv, matching", 1, golden_values},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Probe pr;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(pr);
    } catch (const std::exception& e) {
      pr.misses.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = pr.misses.empty() && in_time;
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  ["
         << std::fixed << std::setprecision(3) << secs << "s / " << std::setprecision(0)
         << c.limit_seconds << "s]";
    std::cout << line.str() << "\n";
    if (!in_time) std::cout << "        over time limit\n";
    for (std::size_t i = 0; i < pr.misses.size() && i < 5; ++i) {
      std::cout << "        " << pr.misses[i] << "\n";
    }
    if (pr.misses.size() > 5) std::cout << "        ... " << pr.misses.size() - 5 << " more\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed;
}
