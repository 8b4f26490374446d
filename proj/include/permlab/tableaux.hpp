#pragma once

#include <cstddef>
#include <vector>

#include "permlab/dyck.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

/// Young tableau stored row by row; rows strictly increase and row lengths
/// weakly decrease.
struct Tableau {
  std::vector<std::vector<int>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::vector<std::size_t> shape() const;
  /// 1-based row containing `value`, or 0 when absent.
  std::size_t row_of(int value) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct TableauPair {
  Tableau p;  ///< insertion tableau
  Tableau q;  ///< recording tableau

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Robinson-Schensted row insertion: each value bumps the leftmost larger
/// entry of its row into the next row.
TableauPair rsk(const Permutation& p);

/// Inverse of rsk for a pair of standard tableaux of equal shape.
Permutation rsk_inverse(const TableauPair& pq);

/// (excedance value, non-excedance position) pairs, in emission order.
struct MatchedPair {
  int value = 0;
  std::size_t position = 0;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

using Matching = std::vector<MatchedPair>;

/// Walks excedances e_1 < ... < e_k and non-excedances a_1 < ... against
/// each other: skip a_q while e_p > a_q, skip e_p while p(e_p) < p(a_q),
/// otherwise match p(e_p) with a_q and advance both.
Matching matching(const Permutation& p);

/// 321-avoider -> Dyck path. The left half reads P (u for row 1, d for
/// row 2) over 1..n, the right half reads Q (u for row 2, d for row 1)
/// over n..1. Throws DomainError when P has more than two rows.
DyckPath psi(const Permutation& p);

/// Inverse of psi: rebuilds the two-row (P, Q) from the halves and runs
/// reverse insertion.
Permutation psi_inv(const DyckPath& d);

}  // namespace permlab
