#include "permlab/tableaux.hpp"

#include <algorithm>

#include "permlab/errors.hpp"

namespace permlab {

std::vector<std::size_t> Tableau::shape() const {
  std::vector<std::size_t> s;
  for (const auto& r : rows) s.push_back(r.size());
  return s;
}

std::size_t Tableau::row_of(int value) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (std::find(rows[r].begin(), rows[r].end(), value) != rows[r].end()) return r + 1;
  }
  return 0;
}

TableauPair rsk(const Permutation& p) {
  TableauPair pq;
  auto& prows = pq.p.rows;
  auto& qrows = pq.q.rows;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    int x = p(i);
    for (std::size_t r = 0;; ++r) {
      if (r == prows.size()) {
        prows.push_back({x});
        qrows.push_back({static_cast<int>(i)});
        break;
      }
      auto& row = prows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        qrows[r].push_back(static_cast<int>(i));
        break;
      }
      std::swap(x, *it);
    }
  }
  return pq;
}

Permutation rsk_inverse(const TableauPair& pq) {
  if (pq.p.shape() != pq.q.shape()) throw DomainError("rsk_inverse: shapes differ");
  auto prows = pq.p.rows;
  auto qrows = pq.q.rows;
  std::size_t n = 0;
  for (const auto& r : qrows) n += r.size();
  Word w(n);
  for (std::size_t i = n; i >= 1; --i) {
    // The cell created at step i is where i sits in Q.
    std::size_t r = 0;
    while (r < qrows.size() && (qrows[r].empty() || qrows[r].back() != static_cast<int>(i))) ++r;
    if (r == qrows.size()) throw DomainError("rsk_inverse: Q is not standard");
    qrows[r].pop_back();
    int x = prows[r].back();
    prows[r].pop_back();
    while (r > 0) {
      --r;
      auto& row = prows[r];
      // Reverse bump: replace the rightmost entry smaller than x.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      if (it == row.begin()) throw DomainError("rsk_inverse: P is not standard");
      --it;
      std::swap(x, *it);
    }
    w[i - 1] = x;
    while (!prows.empty() && prows.back().empty()) {
      prows.pop_back();
      qrows.pop_back();
    }
  }
  return Permutation(std::move(w));
}

Matching matching(const Permutation& p) {
  std::vector<std::size_t> exc, nonexc;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    (p(i) > static_cast<int>(i) ? exc : nonexc).push_back(i);
  }
  Matching m;
  std::size_t ep = 0, aq = 0;
  while (ep < exc.size() && aq < nonexc.size()) {
    if (exc[ep] > nonexc[aq]) {
      ++aq;
    } else if (p(exc[ep]) < p(nonexc[aq])) {
      ++ep;
    } else {
      m.push_back({p(exc[ep]), nonexc[aq]});
      ++ep;
      ++aq;
    }
  }
  return m;
}

DyckPath psi(const Permutation& p) {
  const auto pq = rsk(p);
  if (pq.p.row_count() > 2) {
    throw DomainError("psi requires a 321-avoiding permutation: " + p.to_string());
  }
  const auto n = p.size();
  std::vector<Step> steps;
  steps.reserve(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    steps.push_back(pq.p.row_of(static_cast<int>(i)) == 1 ? Step::up : Step::down);
  }
  for (std::size_t j = n; j >= 1; --j) {
    steps.push_back(pq.q.row_of(static_cast<int>(j)) == 2 ? Step::up : Step::down);
  }
  return DyckPath(std::move(steps));
}

Permutation psi_inv(const DyckPath& d) {
  const auto n = d.semilength();
  const auto& s = d.steps();
  TableauPair pq;
  pq.p.rows.resize(2);
  pq.q.rows.resize(2);
  for (std::size_t i = 1; i <= n; ++i) {
    pq.p.rows[s[i - 1] == Step::up ? 0 : 1].push_back(static_cast<int>(i));
  }
  for (std::size_t j = n; j >= 1; --j) {
    pq.q.rows[s[2 * n - j] == Step::up ? 1 : 0].push_back(static_cast<int>(j));
  }
  std::sort(pq.q.rows[0].begin(), pq.q.rows[0].end());
  std::sort(pq.q.rows[1].begin(), pq.q.rows[1].end());
  if (pq.p.rows[1].empty()) {
    pq.p.rows.pop_back();
    pq.q.rows.pop_back();
  }
  if (pq.p.shape() != pq.q.shape()) {
    throw DomainError("psi_inv: halves of " + d.to_string() + " give different shapes");
  }
  return rsk_inverse(pq);
}

}  // namespace permlab
