#include "permlab/bijections.hpp"

#include <algorithm>
#include <functional>

#include "permlab/dyck.hpp"
#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"

namespace permlab {

namespace {

const Permutation kP321{3, 2, 1};
const Permutation kP132{1, 3, 2};

void require_321_avoiding(const Permutation& p, const char* op) {
  if (!avoids(p, kP321)) {
    throw DomainError(std::string(op) + " requires a 321-avoiding permutation: " + p.to_string());
  }
}

void require_132_avoiding(const Permutation& p, const char* op) {
  if (!avoids(p, kP132)) {
    throw DomainError(std::string(op) + " requires a 132-avoiding permutation: " + p.to_string());
  }
}

}  // namespace

Permutation theta_composed(const Permutation& p) {
  require_321_avoiding(p, "theta");
  return phi_inv(psi(p));
}

Permutation theta_recursive(const Permutation& p, ThetaTrace* trace) {
  require_321_avoiding(p, "theta");
  if (trace) trace->clear();
  if (p.empty()) return p;

  Permutation prev_prefix{1};
  Permutation image{1};
  if (trace) trace->push_back({1, prev_prefix, std::nullopt, image});
  for (std::size_t l = 2; l <= p.size(); ++l) {
    Permutation prefix = reduce(p.values().first(l));
    const int k = prefix(l);
    const auto matched = matching(prev_prefix);
    const int j = 1 + static_cast<int>(std::count_if(
                          matched.begin(), matched.end(),
                          [k](const MatchedPair& m) { return m.value < k; }));
    const auto position = static_cast<std::size_t>(static_cast<int>(l) - k + j);
    image = insert_at(image, position, j);
    if (trace) trace->push_back({l, prefix, std::make_pair(position, j), image});
    prev_prefix = std::move(prefix);
  }
  return image;
}

Permutation theta_inverse(const Permutation& a) {
  require_132_avoiding(a, "theta-inv");
  if (a.empty()) return a;

  // Peel one entry per level, then replay the insertions bottom-up.
  std::vector<std::pair<std::size_t, int>> insertions;
  Permutation cur = a;
  while (cur.size() > 1) {
    const auto n = cur.size();
    std::size_t k = 1;
    while (cur(k) > static_cast<int>(k)) ++k;
    insertions.emplace_back(n, static_cast<int>(n) + cur(k) - static_cast<int>(k));
    cur = delete_at(cur, k);
  }
  Permutation out{1};
  for (auto it = insertions.rbegin(); it != insertions.rend(); ++it) {
    out = insert_at(out, it->first, it->second);
  }
  return out;
}

Permutation m_step(const Permutation& p) {
  auto occ = smallest_occurrence(p, kP132);
  if (!occ) return p;
  Word w = p.word();
  std::vector<int> vals;
  for (auto pos : *occ) vals.push_back(w[pos - 1]);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  for (std::size_t t = 0; t < occ->size(); ++t) w[(*occ)[t] - 1] = vals[t];
  return Permutation(std::move(w));
}

Permutation gamma(const Permutation& p, GammaTrace* trace) {
  require_321_avoiding(p, "gamma");
  if (trace) {
    trace->clear();
    trace->push_back(p);
  }
  Permutation cur = p;
  int inv = inversions(cur);
  const auto n = static_cast<int>(p.size());
  const int max_steps = n * (n - 1) / 2;
  for (int step = 0;; ++step) {
    Permutation next = m_step(cur);
    if (next == cur) return cur;
    const int next_inv = inversions(next);
    if (next_inv <= inv || step >= max_steps) {
      throw std::logic_error("gamma: inversion count failed to increase at " + cur.to_string());
    }
    inv = next_inv;
    cur = std::move(next);
    if (trace) trace->push_back(cur);
  }
}

SumProductCheck theta_sum_product(const Permutation& s1, const Permutation& s2) {
  require_321_avoiding(s1, "theta_sum_product");
  require_321_avoiding(s2, "theta_sum_product");
  SumProductCheck c;
  c.lhs = theta_recursive(direct_sum(s1, s2));
  c.rhs = direct_product(theta_recursive(s2), theta_recursive(s1));
  c.equal = c.lhs == c.rhs;
  return c;
}

}  // namespace permlab
