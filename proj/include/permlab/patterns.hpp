#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// Ascending 1-based positions i1 < ... < ik of a pattern occurrence.
using Occurrence = std::vector<std::size_t>;

/// All occurrences of `pattern` in `host`, in lexicographic order of the
/// position tuples.
std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern);

/// The lexicographically smallest occurrence, if any.
std::optional<Occurrence> smallest_occurrence(const Permutation& host,
                                              const Permutation& pattern);

bool contains(std::span<const int> word, const Permutation& pattern);
bool avoids(const Permutation& host, const Permutation& pattern);
bool avoids_all(const Permutation& host, std::span<const Permutation> patterns);

/// Parses a comma separated list of patterns, e.g. "123,132".
std::vector<Permutation> parse_pattern_list(std::string_view text);

/// Visits S_n(patterns) in lexicographic order. A prefix that already
/// contains a pattern is never extended.
void for_each_avoider(std::size_t n, std::span<const Permutation> patterns,
                      const std::function<void(const Permutation&)>& visit);

/// Same, restricted to permutations whose first entry is `first`
/// (1 <= first <= n). The shards for first = 1..n partition S_n(patterns)
/// and, concatenated in order, give the full lexicographic stream.
void for_each_avoider_with_first(std::size_t n, int first,
                                 std::span<const Permutation> patterns,
                                 const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_avoiders(std::size_t n,
                                            std::span<const Permutation> patterns);

/// S_n(patterns) as a value: members are lexicographically ordered.
struct AvoidanceClass {
  std::size_t n = 0;
  std::vector<Permutation> patterns;
  std::vector<Permutation> members;
};

AvoidanceClass avoidance_class(std::size_t n, std::vector<Permutation> patterns);

bool is_nonnesting(const Permutation& p);
bool is_noncrossing(const Permutation& p);

}  // namespace permlab
