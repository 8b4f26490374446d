#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/poly.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

/// A statistic and the variable that carries it.
struct StatVar {
  Stat stat = Stat::crs;
  std::string var;
  friend bool operator==(const StatVar&, const StatVar&) = default;
};

using VarMap = std::vector<StatVar>;

/// Default variables. A lone statistic uses x, except exc/inv/maj which use
/// q. Several statistics follow x, y, q, p conventions: crs takes x (or p
/// when exc is also requested), nes y, exc q, fp x, inv and maj q; clashes
/// fall back to t, s, u, v, w. Duplicate statistics are a UsageError.
VarMap default_vars(std::span<const Stat> stats);

/// Parses "crs=x,nes=y" overriding the defaults for the named statistics.
/// Naming a statistic outside `stats` is a UsageError.
VarMap parse_var_map(std::string_view text, std::span<const Stat> stats);

std::vector<Stat> parse_stat_list(std::string_view text);

/// Sum over S_n(patterns) of the product of var^stat. An empty pattern list
/// means all of S_n. `jobs` > 1 shards the enumeration by first entry.
MultiPoly distribution(std::size_t n, std::span<const Permutation> patterns,
                       const VarMap& vars, unsigned jobs = 1);

MultiPoly distribution(std::size_t n, std::span<const Permutation> patterns,
                       std::span<const Stat> stats, unsigned jobs = 1);

struct WilfClass {
  std::vector<Permutation> patterns;  ///< ascending
  std::vector<MultiPoly> witness;     ///< witness[n-1] for n = 1..n_max
};

struct WilfReport {
  std::vector<Stat> stats;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<WilfClass> classes;  ///< ordered by smallest member

  /// Classes as lists of compact pattern strings, e.g. {{"132","213"},...}.
  std::vector<std::vector<std::string>> partition() const;
};

/// Groups single patterns whose avoiders have equal joint distributions of
/// `stats` for every n in 1..n_max.
WilfReport wilf_partition(std::vector<Permutation> patterns, std::span<const Stat> stats,
                          std::size_t n_max, unsigned jobs = 1);

struct CatalanQP {
  std::size_t n = 0;
  MultiPoly poly;  ///< over q, p
};

/// C_n(q,p) = C_{n-1} + q * sum_{k=0}^{n-2} p^k C_k C_{n-1-k}, C_0 = C_1 = 1.
/// Memoized across calls.
CatalanQP catalan_qp(std::size_t n);

/// Continued fraction 1/(1 - c_1 z/(1 - c_2 z/(1 - ...))) given by its
/// level coefficients c_m, m >= 1.
struct CFracSpec {
  std::function<MultiPoly(std::size_t)> level;
};

/// c_{2m} = q p^{m-1}, c_{2m+1} = p^m.
CFracSpec qp_catalan_ladder();
/// c_{2m-1} = c_{2m} = sum_{i<m} x^i y^{m-1-i}.
CFracSpec crs_nes_ladder();
/// c_m = 1.
CFracSpec unit_ladder();

/// Coefficients of z^0..z^N. The fraction is truncated at `depth` levels,
/// N+1 by default, which is already exact through z^N.
std::vector<MultiPoly> cfrac_series(const CFracSpec& spec, std::size_t N,
                                    std::optional<std::size_t> depth = std::nullopt);

/// I_n(q) by its own recurrence, by C_n(q,q), and by summing q^inv over
/// S_n(321).
struct InvDistCheck {
  std::size_t n = 0;
  MultiPoly recurrence;
  MultiPoly c_qq;
  MultiPoly enumerated;
  bool equal = false;
};

InvDistCheck inv_dist_check(std::size_t n, unsigned jobs = 1);

/// I_n = I_{n-1} + sum_{k=0}^{n-2} q^{k+1} I_k I_{n-1-k}, I_0 = I_1 = 1.
MultiPoly inv_recurrence(std::size_t n);

}  // namespace permlab
