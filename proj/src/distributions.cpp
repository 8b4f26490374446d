#include "permlab/distributions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"

namespace permlab {

namespace {

bool requested(std::span<const Stat> stats, Stat s) {
  return std::find(stats.begin(), stats.end(), s) != stats.end();
}

void require_distinct(std::span<const Stat> stats) {
  for (std::size_t i = 0; i < stats.size(); ++i) {
    for (std::size_t j = i + 1; j < stats.size(); ++j) {
      if (stats[i] == stats[j]) {
        throw UsageError("statistic '" + std::string(stat_name(stats[i])) + "' listed twice");
      }
    }
  }
}

std::vector<std::string> preferences(Stat s, std::span<const Stat> stats) {
  switch (s) {
    case Stat::crs:
      return requested(stats, Stat::exc) ? std::vector<std::string>{"p", "x"}
                                         : std::vector<std::string>{"x", "p"};
    case Stat::nes: return {"y"};
    case Stat::exc: return {"q"};
    case Stat::fp: return {"x"};
    case Stat::inv:
    case Stat::maj: return {"q"};
  }
  return {};
}

std::string pick_free(const std::vector<std::string>& wanted, const std::vector<std::string>& taken) {
  static const std::vector<std::string> kFallback{"t", "s", "u", "v", "w"};
  auto is_free = [&](const std::string& v) {
    return std::find(taken.begin(), taken.end(), v) == taken.end();
  };
  for (const auto& v : wanted) {
    if (is_free(v)) return v;
  }
  for (const auto& v : kFallback) {
    if (is_free(v)) return v;
  }
  throw UsageError("too many statistics for the default variable names");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    out.push_back(trim(text.substr(start, at == std::string_view::npos ? at : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

using Counts = std::map<Exponent, std::uint64_t>;

struct Layout {
  std::vector<std::string> vars;
  std::vector<std::pair<Stat, std::size_t>> slots;  // stat -> variable index
};

Layout layout_of(const VarMap& map) {
  Layout l;
  for (const auto& sv : map) l.vars.push_back(sv.var);
  l.vars = union_vars(l.vars, {});
  for (const auto& sv : map) {
    const auto it = std::find(l.vars.begin(), l.vars.end(), sv.var);
    l.slots.emplace_back(sv.stat, static_cast<std::size_t>(it - l.vars.begin()));
  }
  return l;
}

void tally(const Layout& l, const Permutation& p, Counts& counts) {
  const auto st = statistics(p);
  Exponent e(l.vars.size(), 0);
  for (const auto& [stat, slot] : l.slots) e[slot] += static_cast<unsigned>(stat_value(st, stat));
  ++counts[e];
}

}  // namespace

std::vector<Stat> parse_stat_list(std::string_view text) {
  std::vector<Stat> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_stat(part));
  require_distinct(out);
  return out;
}

VarMap default_vars(std::span<const Stat> stats) {
  require_distinct(stats);
  VarMap out(stats.size());
  if (stats.size() == 1) {
    const Stat s = stats[0];
    const bool q_like = s == Stat::exc || s == Stat::inv || s == Stat::maj;
    out[0] = {s, q_like ? "q" : "x"};
    return out;
  }
  static const Stat kPriority[] = {Stat::crs, Stat::nes, Stat::exc, Stat::fp, Stat::inv, Stat::maj};
  std::vector<std::string> taken;
  for (Stat s : kPriority) {
    const auto it = std::find(stats.begin(), stats.end(), s);
    if (it == stats.end()) continue;
    const auto var = pick_free(preferences(s, stats), taken);
    taken.push_back(var);
    out[static_cast<std::size_t>(it - stats.begin())] = {s, var};
  }
  return out;
}

VarMap parse_var_map(std::string_view text, std::span<const Stat> stats) {
  std::map<Stat, std::string> overrides;
  if (!trim(text).empty()) {
    for (auto item : split(text, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw UsageError("--vars entries look like stat=var, got '" + std::string(item) + "'");
      }
      const Stat s = parse_stat(trim(item.substr(0, eq)));
      const auto var = std::string(trim(item.substr(eq + 1)));
      const bool ident = !var.empty() && std::all_of(var.begin(), var.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      });
      if (!ident) throw UsageError("variable names are letters only, got '" + var + "'");
      if (!requested(stats, s)) {
        throw UsageError("--vars names '" + std::string(stat_name(s)) + "', which is not in --stats");
      }
      if (!overrides.emplace(s, var).second) {
        throw UsageError("--vars maps '" + std::string(stat_name(s)) + "' twice");
      }
    }
  }
  VarMap out = default_vars(stats);
  std::vector<std::string> taken;
  for (const auto& [s, v] : overrides) taken.push_back(v);
  for (auto& sv : out) {
    const auto it = overrides.find(sv.stat);
    if (it != overrides.end()) {
      sv.var = it->second;
    } else if (std::find(taken.begin(), taken.end(), sv.var) != taken.end()) {
      sv.var = pick_free(preferences(sv.stat, stats), taken);
      taken.push_back(sv.var);
    } else {
      taken.push_back(sv.var);
    }
  }
  return out;
}

MultiPoly distribution(std::size_t n, std::span<const Permutation> patterns, const VarMap& vars,
                       unsigned jobs) {
  const Layout l = layout_of(vars);
  Counts total;
  if (n == 0 || jobs <= 1) {
    for_each_avoider(n, patterns, [&](const Permutation& p) { tally(l, p, total); });
  } else {
    // One shard per first entry; workers pull shards from a shared counter.
    std::vector<Counts> shards(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t s; (s = next.fetch_add(1)) < n;) {
        for_each_avoider_with_first(n, static_cast<int>(s + 1), patterns,
                                    [&](const Permutation& p) { tally(l, p, shards[s]); });
      }
    };
    std::vector<std::thread> pool;
    const auto count = std::min<std::size_t>(jobs, n);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& shard : shards) {
      for (const auto& [e, c] : shard) total[e] += c;
    }
  }
  MultiPoly out(l.vars);
  for (const auto& [e, c] : total) out.add_term(e, BigInt(c));
  return out;
}

MultiPoly distribution(std::size_t n, std::span<const Permutation> patterns,
                       std::span<const Stat> stats, unsigned jobs) {
  return distribution(n, patterns, default_vars(stats), jobs);
}

std::vector<std::vector<std::string>> WilfReport::partition() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : classes) {
    auto& row = out.emplace_back();
    for (const auto& p : c.patterns) row.push_back(p.to_compact());
  }
  return out;
}

WilfReport wilf_partition(std::vector<Permutation> patterns, std::span<const Stat> stats,
                          std::size_t n_max, unsigned jobs) {
  if (n_max < 1) throw UsageError("wilf: --n-max must be at least 1");
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());

  WilfReport report;
  report.stats.assign(stats.begin(), stats.end());
  report.n_max = n_max;
  const VarMap vars = default_vars(stats);
  for (const auto& tau : patterns) {
    std::vector<MultiPoly> polys;
    for (std::size_t n = 1; n <= n_max; ++n) {
      polys.push_back(distribution(n, std::span<const Permutation>(&tau, 1), vars, jobs));
    }
    auto it = std::find_if(report.classes.begin(), report.classes.end(),
                           [&](const WilfClass& c) { return c.witness == polys; });
    if (it == report.classes.end()) {
      report.classes.push_back({{tau}, std::move(polys)});
    } else {
      it->patterns.push_back(tau);
    }
  }
  return report;
}

CatalanQP catalan_qp(std::size_t n) {
  static std::mutex mu;
  static std::vector<MultiPoly> memo;
  std::lock_guard lock(mu);
  const std::vector<std::string> vars{"q", "p"};
  while (memo.size() <= n) {
    const auto m = memo.size();
    if (m < 2) {
      memo.push_back(MultiPoly::constant(1, vars));
      continue;
    }
    MultiPoly sum(vars);
    for (std::size_t k = 0; k + 2 <= m; ++k) {
      sum += (memo[k] * memo[m - 1 - k]).shifted("p", static_cast<unsigned>(k));
    }
    memo.push_back(memo[m - 1] + sum.shifted("q", 1));
  }
  return {n, memo[n]};
}

CFracSpec qp_catalan_ladder() {
  return {[](std::size_t m) {
    const std::vector<std::string> vars{"q", "p"};
    if (m % 2 == 0) return MultiPoly::monomial(vars, {1, static_cast<unsigned>(m / 2 - 1)}, 1);
    return MultiPoly::monomial(vars, {0, static_cast<unsigned>(m / 2)}, 1);
  }};
}

CFracSpec crs_nes_ladder() {
  return {[](std::size_t m) {
    const auto pair = static_cast<unsigned>((m + 1) / 2);
    MultiPoly out({"x", "y"});
    for (unsigned i = 0; i < pair; ++i) out.add_term({i, pair - 1 - i}, 1);
    return out;
  }};
}

CFracSpec unit_ladder() {
  return {[](std::size_t) { return MultiPoly::constant(1); }};
}

std::vector<MultiPoly> cfrac_series(const CFracSpec& spec, std::size_t N,
                                    std::optional<std::size_t> depth) {
  const std::size_t levels = depth.value_or(N + 1);
  // g holds the series of the tail fraction starting below the current level.
  std::vector<MultiPoly> g(N + 1, MultiPoly());
  g[0] = MultiPoly::constant(1);
  for (std::size_t m = levels; m >= 1; --m) {
    const MultiPoly c = spec.level(m);
    // h = c z g, then g <- 1 / (1 - h).
    std::vector<MultiPoly> h(N + 1, MultiPoly());
    for (std::size_t k = 1; k <= N; ++k) h[k] = c * g[k - 1];
    std::vector<MultiPoly> next(N + 1, MultiPoly());
    next[0] = MultiPoly::constant(1);
    for (std::size_t k = 1; k <= N; ++k) {
      for (std::size_t i = 1; i <= k; ++i) next[k] += h[i] * next[k - i];
    }
    g = std::move(next);
  }
  return g;
}

MultiPoly inv_recurrence(std::size_t n) {
  std::vector<MultiPoly> memo;
  for (std::size_t m = 0; m <= n; ++m) {
    if (m < 2) {
      memo.push_back(MultiPoly::constant(1, {"q"}));
      continue;
    }
    MultiPoly next = memo[m - 1];
    for (std::size_t k = 0; k + 2 <= m; ++k) {
      next += (memo[k] * memo[m - 1 - k]).shifted("q", static_cast<unsigned>(k + 1));
    }
    memo.push_back(std::move(next));
  }
  return memo[n];
}

InvDistCheck inv_dist_check(std::size_t n, unsigned jobs) {
  InvDistCheck c;
  c.n = n;
  c.recurrence = inv_recurrence(n);
  c.c_qq = catalan_qp(n).poly.substitute("p", std::string("q"));
  const Permutation p321{3, 2, 1};
  const VarMap vars{{Stat::inv, "q"}};
  c.enumerated = distribution(n, std::span<const Permutation>(&p321, 1), vars, jobs);
  c.equal = c.recurrence == c.c_qq && c.c_qq == c.enumerated;
  return c;
}

}  // namespace permlab
