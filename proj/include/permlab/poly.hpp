#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::vector<unsigned>;

/// Canonical monomial order: ascending total degree, then descending lex on
/// the exponent vector (so x precedes y and x^2 precedes xy).
struct MonomialLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Rank of a variable name in the canonical order x, y, q, p, z, then any
/// other name alphabetically.
bool variable_less(const std::string& a, const std::string& b);

/// Sparse polynomial with integer coefficients over named variables.
/// Variables are kept in canonical order; zero coefficients are never
/// stored. Binary operations embed both operands into the union of their
/// variables.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, BigInt, MonomialLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(const BigInt& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponent e, const BigInt& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * x^e; e is indexed like vars().
  void add_term(const Exponent& e, const BigInt& c);

  BigInt coefficient_of(const Exponent& e) const;
  /// Exponents given by name; unnamed variables have exponent 0.
  BigInt coefficient_of(const std::map<std::string, unsigned>& e) const;

  /// Same polynomial over a superset of variables (reordered canonically).
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that appear in no term.
  MultiPoly trimmed() const;

  unsigned degree_in(const std::string& var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  MultiPoly scaled(const BigInt& c) const;
  /// Multiplies by var^k.
  MultiPoly shifted(const std::string& var, unsigned k) const;

  /// var -> integer value; the variable is removed.
  MultiPoly substitute(const std::string& var, const BigInt& value) const;
  /// var -> other variable (merged if already present).
  MultiPoly substitute(const std::string& var, const std::string& other) const;
  /// Simultaneous renaming, e.g. {x->y, y->x}.
  MultiPoly renamed(const std::map<std::string, std::string>& names) const;

  /// Value with every variable set to `value`.
  BigInt evaluate_all(const BigInt& value) const;

  /// "7+6x+x²", "1+2q+q²+qp"; zero prints as "0".
  std::string pretty() const;

  /// Structural equality after aligning variable sets.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Text of a BigInt in base 10.
std::string to_string(const BigInt& v);

}  // namespace permlab
