#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// A finite sequence of integers; intermediate results of the shift
/// operators, not necessarily a permutation of 1..n.
using Word = std::vector<int>;

/// Permutation of {1,...,n} in one-line notation.
///
/// Every external index is 1-based: `p(i)` is the value at position i and
/// `p.position_of(v)` is the position holding value v. Instances are
/// immutable once constructed.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` contains each of 1..n exactly once.
  explicit Permutation(Word values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(std::size_t n);

  /// Parses "4 1 6 2 7 3 5", "4,1,6,2,7,3,5" or, for n <= 9, "4162735".
  static Permutation parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  int operator()(std::size_t position) const { return values_[position - 1]; }
  std::size_t position_of(int value) const;

  std::span<const int> values() const { return values_; }
  const Word& word() const { return values_; }

  /// Spaced emission form, e.g. "7 6 5 2 1 3 4".
  std::string to_string() const;
  /// Digits without separators; only meaningful when size() <= 9.
  std::string to_compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Standardization: replaces each entry by its rank among the entries.
Permutation reduce(std::span<const int> word);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
/// rc(p)(n+1-i) = n+1-p(i)
Permutation reverse_complement(const Permutation& p);
/// rci(p)(n+1-p(i)) = n+1-i
Permutation reverse_complement_inverse(const Permutation& p);

/// p^{+a}: every entry shifted by a.
Word shift_add(std::span<const int> p, int a);
/// p^{a⋊b}: entries >= a shifted by b, the rest unchanged.
Word shift_from(std::span<const int> p, int a, int b);

/// p^{(a,b)}: inserts value b at position a, bumping entries >= b.
/// Requires 1 <= a, b <= |p|+1.
Permutation insert_at(const Permutation& p, std::size_t a, int b);
/// Removes position a and standardizes; inverse of insert_at.
Permutation delete_at(const Permutation& p, std::size_t a);
/// p^{(a,q)} = p^{{(a,q(1)),(a+1,q(2)),...}}.
Permutation insert_block(const Permutation& p, std::size_t a, const Permutation& q);

/// a ⊕ b = a . b^{+|a|}
Permutation direct_sum(const Permutation& a, const Permutation& b);
/// Maximal decomposition into ⊕-irreducible blocks, left to right.
std::vector<Permutation> sum_components(const Permutation& p);

/// T(p) = { i : p^{-1}(i) > i < p(i) }, ascending. On 132-avoiders this
/// is always a prefix {1,...,t} with t <= n/2.
std::vector<int> t_set(const Permutation& p);

/// a ⊗ b = b^{(k, a^{+(k-1)})} with k = 1 + |T(b)|. Both operands must
/// avoid 132.
Permutation direct_product(const Permutation& a, const Permutation& b);
/// Maximal ⊗-irreducible factorization of a 132-avoider; folding the
/// factors with direct_product (in order) reproduces the input.
std::vector<Permutation> product_components(const Permutation& p);

}  // namespace permlab
