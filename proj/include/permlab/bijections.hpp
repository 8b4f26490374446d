#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// One level of the prefix recursion for Θ.
struct ThetaTraceRow {
  std::size_t l = 0;                    ///< prefix length
  Permutation reduced_prefix;           ///< red(σ(1..l))
  std::optional<std::pair<std::size_t, int>> insertion;  ///< (l-σ_l(l)+j, j); none at l = 1
  Permutation image;                    ///< Θ(red(σ(1..l)))
};

using ThetaTrace = std::vector<ThetaTraceRow>;

/// Θ = Φ⁻¹ ∘ Ψ : S_n(321) -> S_n(132).
Permutation theta_composed(const Permutation& p);

/// Θ by insertion: Θ(σ) = Θ(π)^{(n-σ(n)+j, j)} where π = red(σ(1..n-1))
/// and j-1 counts matched excedance values of π below σ(n). Runs as a loop
/// over prefixes, so depth is not bounded by the stack.
Permutation theta_recursive(const Permutation& p, ThetaTrace* trace = nullptr);

/// Θ⁻¹ : S_n(132) -> S_n(321). With k the smallest non-excedance of α and
/// β = α with position k removed, Θ⁻¹(α) = Θ⁻¹(β)^{(|α|, |α|+α(k)-k)}.
Permutation theta_inverse(const Permutation& a);

/// Rewrites the lexicographically smallest 132 occurrence into a 321
/// occurrence (its three values sorted decreasingly in place). Identity on
/// 132-avoiders.
Permutation m_step(const Permutation& p);

using GammaTrace = std::vector<Permutation>;

/// Iterates m_step from a 321-avoider until the result avoids 132. The
/// trace holds σ, Mσ, ..., Γ(σ).
Permutation gamma(const Permutation& p, GammaTrace* trace = nullptr);

/// Both sides of Θ(σ1 ⊕ σ2) = Θ(σ2) ⊗ Θ(σ1), computed independently.
struct SumProductCheck {
  Permutation lhs;
  Permutation rhs;
  bool equal = false;
};

SumProductCheck theta_sum_product(const Permutation& s1, const Permutation& s2);

}  // namespace permlab
