#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

struct Statistics {
  int fp = 0;   ///< fixed points, p(i) = i
  int exc = 0;  ///< excedances, p(i) > i
  int crs = 0;  ///< crossings
  int nes = 0;  ///< nestings
  int inv = 0;  ///< inversions
  int maj = 0;  ///< sum of descent positions i, p(i) > p(i+1)

  friend bool operator==(const Statistics&, const Statistics&) = default;
};

/// The statistics understood by distributions and the CLI.
enum class Stat { fp, exc, crs, nes, inv, maj };

Stat parse_stat(std::string_view name);  // throws UsageError
std::string_view stat_name(Stat s);
int stat_value(const Statistics& s, Stat which);

Statistics statistics(const Permutation& p);

int crossings(const Permutation& p);
int nestings(const Permutation& p);
int fixed_points(const Permutation& p);
int excedances(const Permutation& p);
int inversions(const Permutation& p);
int major_index(const Permutation& p);

enum class ArcKind { upper_crossing, lower_crossing, upper_nesting, lower_nesting };

std::string_view arc_kind_name(ArcKind k);

/// A crossing or nesting pair of positions i < j (1-based).
struct ArcPair {
  std::size_t i = 0;
  std::size_t j = 0;
  ArcKind kind = ArcKind::upper_crossing;

  friend bool operator==(const ArcPair&, const ArcPair&) = default;
};

/// Every crossing and nesting pair, ordered by (i, j).
std::vector<ArcPair> arc_pairs(const Permutation& p);

/// Change in crossings caused by p -> p^{(a,b)} for b <= a <= |p|+1:
///   A1 = #{b <= i < a : p(i) < b}
///   A2 = #{b <= i < a : a <= p^{-1}(i)}
///   A3 = #{b <= i < a : p^{-1}(i) < i < p(i)}
///   A4 = #{b <= i < a : p(i) < i < p^{-1}(i)}
/// and delta = A1 + A2 + A3 - A4 = crs(p^{(a,b)}) - crs(p).
struct CrossingDelta {
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;
  int a4 = 0;
  int delta = 0;
};

CrossingDelta crossing_delta(const Permutation& p, std::size_t a, int b);

}  // namespace permlab
