#include "permlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permlab/bijections.hpp"
#include "permlab/distributions.hpp"
#include "permlab/dyck.hpp"
#include "permlab/patterns.hpp"
#include "permlab/permutation.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"

namespace permlab {

namespace {

const Permutation P132{1, 3, 2};
const Permutation P213{2, 1, 3};
const Permutation P321{3, 2, 1};

std::vector<Permutation> s3() { return enumerate_avoiders(3, {}); }

std::vector<Permutation> all_perms(std::size_t n) { return enumerate_avoiders(n, {}); }

std::vector<Permutation> avoiders(std::size_t n, const Permutation& tau) {
  return enumerate_avoiders(n, std::span<const Permutation>(&tau, 1));
}

std::size_t catalan_number(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::size_t count_steps(std::span<const Step> s, Step which) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), which));
}

std::string str(const Permutation& p) { return "[" + p.to_string() + "]"; }

// Shared state for one check: size bound, fault injection, and a running
// tally of cases and counterexamples.
class Ctx {
 public:
  Ctx(std::size_t n, const SuiteOptions& o) : n(n), jobs(o.jobs), fault_(o.inject_fault) {}

  const std::size_t n;
  const unsigned jobs;

  Statistics stats(const Permutation& p) const {
    Statistics s = statistics(p);
    if (fault_ && p.size() >= 3 && p(1) == 2) ++s.crs;
    return s;
  }

  int crs(const Permutation& p) const { return stats(p).crs; }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }

  CheckResult result(std::string name) const {
    CheckResult r;
    r.name = std::move(name);
    r.n = n;
    r.cases = cases_;
    r.failures = failures_;
    r.passed = failures_ == 0;
    r.detail = first_;
    return r;
  }

 private:
  bool fault_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

// --- permutations -------------------------------------------------------

void inv_decomposition(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      const auto s = c.stats(p);
      c.expect(s.inv == 2 * s.nes + s.crs + s.exc, [&] { return str(p); });
    }
  }
}

void arc_classification(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      int crossings = 0, nestings = 0;
      bool ok = true;
      for (const auto& a : arc_pairs(p)) {
        const bool crossing =
            a.kind == ArcKind::upper_crossing || a.kind == ArcKind::lower_crossing;
        (crossing ? crossings : nestings)++;
        const auto i = static_cast<int>(a.i), j = static_cast<int>(a.j);
        if (crossing) {
          ok = ok && p(a.i) != i && p(a.j) != j;
        } else if (p(a.i) == i) {
          ok = ok && p(a.j) < i && i < j;
        }
      }
      const auto s = c.stats(p);
      c.expect(ok && crossings == s.crs && nestings == s.nes, [&] { return str(p); });
    }
  }
}

void involutions(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    const int n1 = static_cast<int>(m) + 1;
    for (const auto& p : all_perms(m)) {
      bool ok = reverse(reverse(p)) == p && complement(complement(p)) == p &&
                inverse(inverse(p)) == p;
      const auto rc = reverse_complement(p);
      const auto rci = reverse_complement_inverse(p);
      for (std::size_t i = 1; i <= m; ++i) {
        const int ii = static_cast<int>(i);
        ok = ok && rc(static_cast<std::size_t>(n1 - ii)) == n1 - p(i);
        ok = ok && rci(static_cast<std::size_t>(n1 - p(i))) == n1 - ii;
      }
      c.expect(ok, [&] { return str(p); });
    }
  }
}

void symmetry_statistics(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      const auto s = c.stats(p);
      const auto rc = c.stats(reverse_complement(p));
      const auto rci = c.stats(reverse_complement_inverse(p));
      c.expect(rc.nes == s.nes && rci.crs == s.crs && rci.nes == s.nes, [&] { return str(p); });
    }
  }
}

void crs_nes_symmetry(Ctx& c) {
  const VarMap vars{{Stat::crs, "x"}, {Stat::nes, "y"}};
  for (std::size_t m = 0; m <= c.n; ++m) {
    const auto d = distribution(m, {}, vars, c.jobs);
    c.expect(d == d.renamed({{"x", "y"}, {"y", "x"}}), [&] { return "n=" + std::to_string(m); });
  }
}

void sum_product_algebra(Ctx& c) {
  const std::size_t triple = std::min<std::size_t>(c.n, 6);
  std::vector<std::vector<Permutation>> perms, avoid132;
  for (std::size_t m = 0; m <= c.n; ++m) {
    perms.push_back(all_perms(m));
    avoid132.push_back(avoiders(m, P132));
  }
  for (std::size_t a = 1; a <= triple; ++a) {
    for (std::size_t b = 1; a + b <= triple; ++b) {
      for (std::size_t d = 1; a + b + d <= triple; ++d) {
        for (const auto& x : perms[a])
          for (const auto& y : perms[b])
            for (const auto& z : perms[d]) {
              c.expect(direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z)),
                       [&] { return "sum " + str(x) + str(y) + str(z); });
            }
        for (const auto& x : avoid132[a])
          for (const auto& y : avoid132[b])
            for (const auto& z : avoid132[d]) {
              c.expect(direct_product(direct_product(x, y), z) ==
                           direct_product(x, direct_product(y, z)),
                       [&] { return "product " + str(x) + str(y) + str(z); });
            }
      }
    }
  }
  for (std::size_t m = 1; m <= c.n; ++m) {
    for (const auto& p : perms[m]) {
      const auto comps = sum_components(p);
      Permutation back = comps.front();
      bool irreducible = true;
      for (std::size_t t = 1; t < comps.size(); ++t) back = direct_sum(back, comps[t]);
      for (const auto& q : comps) irreducible = irreducible && sum_components(q).size() == 1;
      c.expect(back == p && irreducible, [&] { return "sum components " + str(p); });
    }
    for (const auto& p : avoid132[m]) {
      const auto comps = product_components(p);
      Permutation back = comps.back();
      bool irreducible = true;
      for (std::size_t t = comps.size() - 1; t-- > 0;) back = direct_product(comps[t], back);
      for (const auto& q : comps) irreducible = irreducible && product_components(q).size() == 1;
      c.expect(back == p && irreducible, [&] { return "product components " + str(p); });
    }
  }
}

void crossing_additivity(Ctx& c) {
  const std::size_t half = std::min<std::size_t>(c.n, 4);
  for (std::size_t a = 1; a <= half; ++a) {
    for (std::size_t b = 1; b <= half; ++b) {
      for (const auto& x : all_perms(a))
        for (const auto& y : all_perms(b))
          c.expect(c.crs(direct_sum(x, y)) == c.crs(x) + c.crs(y),
                   [&] { return "sum " + str(x) + str(y); });
      for (const auto& x : avoiders(a, P132))
        for (const auto& y : avoiders(b, P132)) {
          const auto xy = direct_product(x, y);
          c.expect(avoids(xy, P132) && c.crs(xy) == c.crs(x) + c.crs(y),
                   [&] { return "product " + str(x) + str(y); });
        }
    }
  }
}

void insert_delete_roundtrip(Ctx& c) {
  for (std::size_t m = 0; m < c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      for (std::size_t a = 1; a <= m + 1; ++a) {
        for (int b = 1; b <= static_cast<int>(m) + 1; ++b) {
          const auto q = insert_at(p, a, b);
          c.expect(q(a) == b && delete_at(q, a) == p,
                   [&] { return str(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
        }
      }
    }
  }
}

void insertion_crossing_delta(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      for (std::size_t a = 1; a <= m + 1; ++a) {
        for (int b = 1; b <= static_cast<int>(a); ++b) {
          const auto d = crossing_delta(p, a, b);
          c.expect(c.crs(insert_at(p, a, b)) - c.crs(p) == d.delta,
                   [&] { return str(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
        }
      }
    }
  }
}

void fixed_point_shift(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      for (std::size_t x = 1; x <= m + 1; ++x) {
        const auto px = insert_at(p, x, static_cast<int>(x));
        for (std::size_t a = x + 1; a <= m + 2; ++a) {
          for (int b = 1; b < static_cast<int>(x); ++b) {
            c.expect(crossing_delta(px, a, b).delta == crossing_delta(p, a - 1, b).delta, [&] {
              return str(p) + " x=" + std::to_string(x) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b);
            });
          }
        }
      }
    }
  }
}

void t_set_structure(Ctx& c) {
  for (std::size_t m = 1; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P132)) {
      const auto t = t_set(p);
      bool prefix = true;
      for (std::size_t i = 0; i < t.size(); ++i) prefix = prefix && t[i] == static_cast<int>(i) + 1;
      const auto k = 1 + t.size();
      const bool ok = (t.empty() == (p(1) == 1)) && prefix && 2 * t.size() <= m &&
                      avoids(insert_at(p, k, static_cast<int>(k)), P132);
      c.expect(ok, [&] { return str(p); });
    }
  }
}

// --- patterns -----------------------------------------------------------

void catalan_cardinality(Ctx& c) {
  for (const auto& tau : s3()) {
    for (std::size_t m = 0; m <= c.n; ++m) {
      c.expect(avoiders(m, tau).size() == catalan_number(m),
               [&] { return tau.to_compact() + " n=" + std::to_string(m); });
    }
  }
}

void symmetry_classes(Ctx& c) {
  using Map = std::function<Permutation(const Permutation&)>;
  std::vector<std::pair<std::string, Map>> maps;
  for (int mask = 0; mask < 8; ++mask) {
    std::string name;
    if (mask & 4) name += "r";
    if (mask & 2) name += "c";
    if (mask & 1) name += "i";
    maps.emplace_back(name.empty() ? "id" : name, [mask](const Permutation& p) {
      Permutation q = p;
      if (mask & 1) q = inverse(q);
      if (mask & 2) q = complement(q);
      if (mask & 4) q = reverse(q);
      return q;
    });
  }
  std::vector<std::vector<Permutation>> sets;
  const auto singles = s3();
  for (std::size_t a = 0; a < singles.size(); ++a) {
    sets.push_back({singles[a]});
    for (std::size_t b = a + 1; b < singles.size(); ++b) sets.push_back({singles[a], singles[b]});
  }
  for (std::size_t m = 0; m <= c.n; ++m) {
    const auto perms = all_perms(m);
    for (const auto& [name, f] : maps) {
      for (const auto& t : sets) {
        std::vector<Permutation> ft;
        for (const auto& tau : t) ft.push_back(f(tau));
        for (const auto& p : perms) {
          c.expect(avoids_all(p, t) == avoids_all(f(p), ft),
                   [&, &name = name] { return name + " " + str(p); });
        }
      }
    }
  }
}

void nonnesting_is_321_avoiding(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      c.expect(is_nonnesting(p) == avoids(p, P321), [&] { return str(p); });
    }
  }
}

void smallest_occurrence_head(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      for (const auto& tau : s3()) {
        const auto all = occurrences(p, tau);
        const auto first = smallest_occurrence(p, tau);
        const bool ok = all.empty() ? !first.has_value() : (first && *first == all.front());
        c.expect(ok, [&] { return str(p) + " " + tau.to_compact(); });
      }
    }
  }
}

// --- Dyck paths ---------------------------------------------------------

void tunnel_structure(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& d : DyckPath::all(m)) {
      const auto ts = tunnels(d);
      const auto counts = tunnel_counts(d);
      bool ok = ts.size() == m && counts.left + counts.centered + counts.right == m;
      for (const auto& t : ts) {
        const auto parts = t.decompose(d);
        std::vector<Step> ac = parts.a;
        ac.insert(ac.end(), parts.c.begin(), parts.c.end());
        const auto expected = t.midpoint_x2 < 2 * m   ? TunnelSide::left
                              : t.midpoint_x2 == 2 * m ? TunnelSide::centered
                                                       : TunnelSide::right;
        ok = ok && is_dyck(parts.b) && is_dyck(ac) && t.side == expected;
      }
      c.expect(ok, [&] { return d.to_string(); });
    }
  }
}

void half_balance(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& d : DyckPath::all(m)) {
      const auto [l, r] = halves(d);
      c.expect(count_steps(l, Step::down) == count_steps(r, Step::up), [&] { return d.to_string(); });
    }
  }
}

void phi_inv_bijection(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    std::set<Permutation> seen;
    for (const auto& d : DyckPath::all(m)) {
      const auto p = phi_inv(d);
      c.expect(avoids(p, P132) && seen.insert(p).second && phi(p) == d,
               [&] { return d.to_string(); });
    }
    c.expect(seen.size() == catalan_number(m), [&] { return "image size n=" + std::to_string(m); });
  }
}

void phi_inv_structure(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& d : DyckPath::all(m)) {
      const auto p = phi_inv(d);
      const auto pinv = inverse(p);
      const auto j = count_steps(halves(d).second, Step::up) + 1;
      bool ok = true;
      for (std::size_t i = 1; i < j; ++i) {
        ok = ok && pinv(i) >= static_cast<int>(j) && p(i) >= static_cast<int>(j);
      }
      for (std::size_t i = j; i <= m; ++i) {
        const int ii = static_cast<int>(i);
        if (p(i) > ii) ok = ok && pinv(i) < ii;
      }
      for (const auto& t : tunnels(d)) {
        const auto u = m + 1 - t.up_index;
        const bool left_or_centered = t.side != TunnelSide::right;
        ok = ok && left_or_centered == (u >= t.down_index) &&
             p(u) == static_cast<int>(t.down_index);
      }
      ok = ok && t_set(p).size() + 1 == j;
      c.expect(ok, [&] { return d.to_string(); });
    }
  }
}

void odot_product(Ctx& c) {
  for (std::size_t a = 1; a <= c.n; ++a) {
    for (std::size_t b = 1; a + b <= c.n; ++b) {
      for (const auto& d1 : DyckPath::all(a))
        for (const auto& d2 : DyckPath::all(b)) {
          c.expect(phi_inv(odot(d1, d2)) == direct_product(phi_inv(d2), phi_inv(d1)),
                   [&] { return d1.to_string() + " " + d2.to_string(); });
        }
    }
  }
}

// --- tableaux -----------------------------------------------------------

void rsk_duality(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      const auto pq = rsk(p);
      c.expect(rsk(inverse(p)) == TableauPair{pq.q, pq.p} && rsk_inverse(pq) == p,
               [&] { return str(p); });
    }
  }
}

void two_rows_iff_321_avoiding(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : all_perms(m)) {
      c.expect((rsk(p).p.row_count() <= 2) == avoids(p, P321), [&] { return str(p); });
    }
  }
}

void matching_second_rows(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      const auto pq = rsk(p);
      std::vector<int> values, positions;
      for (const auto& mp : matching(p)) {
        values.push_back(mp.value);
        positions.push_back(static_cast<int>(mp.position));
      }
      const std::vector<int> none;
      const auto& prow = pq.p.row_count() > 1 ? pq.p.rows[1] : none;
      const auto& qrow = pq.q.row_count() > 1 ? pq.q.rows[1] : none;
      c.expect(prow == values && qrow == positions, [&] { return str(p); });
    }
  }
}

void bi_increasing(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      int last_exc = 0, last_non = 0;
      bool ok = true;
      for (std::size_t i = 1; i <= m; ++i) {
        int& last = p(i) > static_cast<int>(i) ? last_exc : last_non;
        ok = ok && p(i) > last;
        last = p(i);
      }
      c.expect(ok, [&] { return str(p); });
    }
  }
}

void psi_bijection(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    std::set<DyckPath> seen;
    for (const auto& p : avoiders(m, P321)) {
      const auto d = psi(p);
      c.expect(seen.insert(d).second && psi_inv(d) == p, [&] { return str(p); });
    }
    c.expect(seen.size() == catalan_number(m), [&] { return "image size n=" + std::to_string(m); });
    for (const auto& d : DyckPath::all(m)) {
      c.expect(psi(psi_inv(d)) == d, [&] { return d.to_string(); });
    }
  }
}

void psi_sum_odot(Ctx& c) {
  for (std::size_t a = 1; a <= c.n; ++a) {
    for (std::size_t b = 1; a + b <= c.n; ++b) {
      for (const auto& x : avoiders(a, P321))
        for (const auto& y : avoiders(b, P321)) {
          c.expect(psi(direct_sum(x, y)) == odot(psi(x), psi(y)),
                   [&] { return str(x) + str(y); });
        }
    }
  }
}

// --- bijections ---------------------------------------------------------

void theta_preserves(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    std::set<Permutation> image;
    for (const auto& p : avoiders(m, P321)) {
      const auto t = theta_recursive(p);
      const auto s = c.stats(p), st = c.stats(t);
      c.expect(avoids(t, P132) && image.insert(t).second && s.fp == st.fp && s.exc == st.exc &&
                   s.crs == st.crs,
               [&] { return str(p); });
    }
    c.expect(image.size() == avoiders(m, P132).size(),
             [&] { return "image size n=" + std::to_string(m); });
  }
}

void theta_forms_agree(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      ThetaTrace trace;
      const auto t = theta_recursive(p, &trace);
      bool ok = t == theta_composed(p);
      if (m >= 2) {
        std::size_t min_non_exc = 1;
        while (t(min_non_exc) > static_cast<int>(min_non_exc)) ++min_non_exc;
        ok = ok && trace.back().insertion->first == min_non_exc;
      }
      c.expect(ok, [&] { return str(p); });
    }
  }
}

void theta_inverse_roundtrip(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      c.expect(theta_inverse(theta_recursive(p)) == p, [&] { return str(p); });
    }
    for (const auto& a : avoiders(m, P132)) {
      c.expect(theta_recursive(theta_inverse(a)) == a, [&] { return str(a); });
    }
  }
}

void statistic_exchange(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      const auto s = c.stats(p);
      const auto t = tunnel_counts(psi(p));
      c.expect(static_cast<std::size_t>(s.fp) == t.centered &&
                   static_cast<std::size_t>(s.exc) == t.right,
               [&] { return str(p); });
    }
    for (const auto& d : DyckPath::all(m)) {
      const auto s = c.stats(phi_inv(d));
      const auto t = tunnel_counts(d);
      c.expect(static_cast<std::size_t>(s.fp) == t.centered &&
                   static_cast<std::size_t>(s.exc) == t.right,
               [&] { return d.to_string(); });
    }
  }
}

void component_counts(Ctx& c) {
  for (std::size_t m = 1; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      const auto sums = sum_components(p).size();
      const auto tunnels = centered_multitunnels(psi(p)).size();
      const auto products = product_components(theta_recursive(p)).size();
      c.expect(sums == tunnels && tunnels == products, [&] { return str(p); });
    }
  }
}

void irreducibility(Ctx& c) {
  for (std::size_t m = 1; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      c.expect((sum_components(p).size() == 1) ==
                   (product_components(theta_recursive(p)).size() == 1),
               [&] { return str(p); });
    }
  }
}

void theta_sum_to_product(Ctx& c) {
  for (std::size_t a = 1; a <= c.n; ++a) {
    for (std::size_t b = 1; a + b <= c.n; ++b) {
      for (const auto& x : avoiders(a, P321))
        for (const auto& y : avoiders(b, P321)) {
          c.expect(theta_sum_product(x, y).equal, [&] { return str(x) + str(y); });
        }
    }
  }
}

void prefix_arc_structure(Ctx& c) {
  for (std::size_t m = 1; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      const auto pinv = inverse(p);
      const int k = p(m);
      bool ok = true;
      for (std::size_t i = static_cast<std::size_t>(k) + 1; i < m; ++i) {
        const int ii = static_cast<int>(i);
        ok = ok && ((p(i) < k && pinv(i) < ii) || (pinv(i) < ii && ii < p(i)));
      }
      c.expect(ok, [&] { return str(p); });
    }
  }
}

struct LastInsertion {
  Permutation prefix;  // reduce(p(1..m-1))
  int k = 0;
  int j = 0;
};

LastInsertion last_insertion(const Permutation& p) {
  LastInsertion li;
  const auto m = p.size();
  li.prefix = reduce(p.values().first(m - 1));
  li.k = p(m);
  li.j = 1;
  for (const auto& mp : matching(li.prefix)) li.j += mp.value < li.k ? 1 : 0;
  return li;
}

void irreducible_insertion_delta(Ctx& c) {
  for (std::size_t m = 2; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      if (sum_components(p).size() != 1) continue;
      const auto li = last_insertion(p);
      const auto lhs = crossing_delta(theta_recursive(li.prefix), m - li.k + li.j, li.j).delta;
      const auto rhs = crossing_delta(li.prefix, m, li.k).delta;
      c.expect(lhs == rhs, [&] { return str(p); });
    }
  }
}

void irreducible_insertion_delta_values(Ctx& c) {
  for (std::size_t m = 2; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      if (sum_components(p).size() != 1) continue;
      const auto li = last_insertion(p);
      const int mm = static_cast<int>(m);
      const int delta = crossing_delta(li.prefix, m, li.k).delta;
      const auto comps = sum_components(li.prefix);
      bool ok;
      if (comps.size() == 1) {
        ok = delta == mm - li.k;
      } else {
        // prefix = alpha ⊕ 1 2 ... l with alpha irreducible
        const auto& alpha = comps.front();
        const int l = mm - 1 - static_cast<int>(alpha.size());
        ok = l >= 1;
        for (std::size_t t = 1; t < comps.size(); ++t) ok = ok && comps[t].size() == 1;
        ok = ok && li.k <= mm - l && delta == mm - l - li.k &&
             crossing_delta(alpha, static_cast<std::size_t>(mm - l), li.k).delta == delta;
      }
      c.expect(ok, [&] {
        return str(p) + " delta=" + std::to_string(delta) + " k=" + std::to_string(li.k);
      });
    }
  }
}

void gamma_identity(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    for (const auto& p : avoiders(m, P321)) {
      const auto g = gamma(p);
      const auto s = c.stats(p), sg = c.stats(g);
      c.expect(g == theta_recursive(reverse_complement_inverse(p)) && avoids(g, P132) &&
                   s.fp == sg.fp && s.exc == sg.exc && s.crs == sg.crs,
               [&] { return str(p); });
    }
  }
}

// --- distributions ------------------------------------------------------

void table_values(Ctx& c) {
  const std::map<std::string, std::pair<std::string, std::string>> expected{
      {"123", {"7+6x+x²", "4+8x+2x²"}}, {"132", {"8+4x+2x²", "7+5x+2x²"}},
      {"213", {"8+4x+2x²", "7+5x+2x²"}}, {"321", {"8+4x+2x²", "14"}},
      {"231", {"8+5x+x²", "8+5x+x²"}},   {"312", {"13+x", "8+5x+x²"}}};
  for (const auto& tau : s3()) {
    const auto span = std::span<const Permutation>(&tau, 1);
    const Stat crs[] = {Stat::crs};
    const Stat nes[] = {Stat::nes};
    const auto& [cr, ne] = expected.at(tau.to_compact());
    const auto got_cr = distribution(4, span, crs, c.jobs).pretty();
    const auto got_ne = distribution(4, span, nes, c.jobs).pretty();
    c.expect(got_cr == cr, [&] { return "crs " + tau.to_compact() + " = " + got_cr; });
    c.expect(got_ne == ne, [&] { return "nes " + tau.to_compact() + " = " + got_ne; });
  }
}

void cfrac_crs_nes(Ctx& c) {
  const auto series = cfrac_series(crs_nes_ladder(), c.n);
  const VarMap vars{{Stat::crs, "x"}, {Stat::nes, "y"}};
  for (std::size_t m = 0; m <= c.n; ++m) {
    c.expect(series[m] == distribution(m, {}, vars, c.jobs), [&] { return "n=" + std::to_string(m); });
  }
}

void cfrac_qp(Ctx& c) {
  const auto series = cfrac_series(qp_catalan_ladder(), c.n);
  const auto deeper = cfrac_series(qp_catalan_ladder(), c.n, c.n + 2);
  for (std::size_t m = 0; m <= c.n; ++m) {
    c.expect(series[m] == catalan_qp(m).poly && series[m] == deeper[m],
             [&] { return "n=" + std::to_string(m); });
  }
}

void catalan_avoiders(Ctx& c) {
  const VarMap vars{{Stat::exc, "q"}, {Stat::crs, "p"}};
  for (std::size_t m = 0; m <= c.n; ++m) {
    const auto cat = catalan_qp(m).poly;
    c.expect(cat.evaluate_all(1) == catalan_number(m), [&] { return "C(1,1) n=" + std::to_string(m); });
    for (const auto& tau : {P321, P132, P213}) {
      c.expect(cat == distribution(m, std::span<const Permutation>(&tau, 1), vars, c.jobs),
               [&] { return tau.to_compact() + " n=" + std::to_string(m); });
    }
  }
}

void fp_exc_crs_equidistribution(Ctx& c) {
  const VarMap vars{{Stat::fp, "x"}, {Stat::exc, "q"}, {Stat::crs, "p"}};
  for (std::size_t m = 0; m <= c.n; ++m) {
    const auto base = distribution(m, std::span<const Permutation>(&P321, 1), vars, c.jobs);
    for (const auto& tau : {P132, P213}) {
      c.expect(base == distribution(m, std::span<const Permutation>(&tau, 1), vars, c.jobs),
               [&] { return tau.to_compact() + " n=" + std::to_string(m); });
    }
  }
}

void inv_identity(Ctx& c) {
  for (std::size_t m = 0; m <= c.n; ++m) {
    c.expect(inv_dist_check(m, c.jobs).equal, [&] { return "n=" + std::to_string(m); });
  }
}

MultiPoly random_poly(std::mt19937& rng) {
  static const std::vector<std::string> names{"x", "y", "q", "p", "z"};
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 3), nvars(1, 3), nterms(0, 5);
  std::vector<std::string> vars;
  const int k = nvars(rng);
  for (int i = 0; i < k; ++i) vars.push_back(names[static_cast<std::size_t>(rng() % names.size())]);
  MultiPoly p(vars);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponent e(p.vars().size());
    for (auto& x : e) x = static_cast<unsigned>(expo(rng));
    p.add_term(e, coeff(rng));
  }
  return p;
}

void poly_arithmetic_laws(Ctx& c) {
  std::mt19937 rng(20240917);
  const std::size_t trials = 40 * c.n;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    const bool ok = a + b == b + a && a * b == b * a && (a + b) + d == a + (b + d) &&
                    (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d &&
                    (a - a).is_zero() &&
                    (a * b).evaluate_all(2) == a.evaluate_all(2) * b.evaluate_all(2);
    c.expect(ok, [&] { return a.pretty() + " | " + b.pretty() + " | " + d.pretty(); });
  }
}

struct Registered {
  CheckInfo info;
  void (*run)(Ctx&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks{
      {{"inversion-decomposition", "inv = 2 nes + crs + exc on S_n", 8}, inv_decomposition},
      {{"arc-classification", "arc pairs count crs/nes; fixed points only nest as i with p(j) < i", 8}, arc_classification},
      {{"symmetry-maps", "r, c, i involutions; rc and rci pointwise formulas", 8}, involutions},
      {{"symmetry-statistics", "rc preserves nes; rci preserves crs and nes", 8}, symmetry_statistics},
      {{"crs-nes-symmetry", "joint crs/nes distribution on S_n symmetric in x and y", 8}, crs_nes_symmetry},
      {{"sum-product-algebra", "⊕ and ⊗ associative; components recompose and are irreducible", 6}, sum_product_algebra},
      {{"crossing-additivity", "crs additive over ⊕ and ⊗; ⊗ stays 132-avoiding", 8}, crossing_additivity},
      {{"insert-delete-roundtrip", "delete(insert(p, a, b), a) = p", 8}, insert_delete_roundtrip},
      {{"insertion-crossing-delta", "crs(p^(a,b)) - crs(p) = A1 + A2 + A3 - A4", 5}, insertion_crossing_delta},
      {{"fixed-point-shift", "delta(p^(x,x), a, b) = delta(p, a-1, b) for b < x < a", 4}, fixed_point_shift},
      {{"t-set-structure", "T(p) on S_n(132): empty iff p(1)=1, prefix, |T| <= n/2, p^(k,k) avoids 132", 6}, t_set_structure},
      {{"catalan-cardinality", "|S_n(t)| = Catalan(n) for t in S_3", 10}, catalan_cardinality},
      {{"symmetry-classes", "p in S_n(T) iff f(p) in S_n(f(T)) for f generated by r, c, i", 7}, symmetry_classes},
      {{"nonnesting-is-321-avoiding", "nes(p) = 0 iff p avoids 321", 8}, nonnesting_is_321_avoiding},
      {{"smallest-occurrence-head", "smallest occurrence = first listed occurrence", 6}, smallest_occurrence_head},
      {{"tunnel-structure", "n tunnels per path; AuBdC splits valid; side from midpoint", 8}, tunnel_structure},
      {{"half-balance", "downs in left half = ups in right half", 8}, half_balance},
      {{"phi-inv-bijection", "Dyck paths -> S_n(132) bijective; phi inverts it", 6}, phi_inv_bijection},
      {{"phi-inv-structure", "image structure around j = |right half|_u + 1; tunnel sides; |T|", 6}, phi_inv_structure},
      {{"odot-to-product", "phi_inv(D1 ⊙ D2) = phi_inv(D2) ⊗ phi_inv(D1)", 6}, odot_product},
      {{"rsk-duality", "rsk(p^-1) = (Q, P); rsk_inverse inverts rsk", 5}, rsk_duality},
      {{"two-rows-iff-321-avoiding", "P has at most two rows iff p avoids 321", 7}, two_rows_iff_321_avoiding},
      {{"matching-second-rows", "second rows of P and Q = matched values and positions", 8}, matching_second_rows},
      {{"bi-increasing", "321-avoiders have increasing excedance and non-excedance values", 8}, bi_increasing},
      {{"psi-bijection", "psi: S_n(321) -> Dyck paths bijective; psi_inv inverts it", 7}, psi_bijection},
      {{"psi-sum-to-odot", "psi(p1 ⊕ p2) = psi(p1) ⊙ psi(p2)", 7}, psi_sum_odot},
      {{"theta-preserves", "theta: S_n(321) -> S_n(132) bijective, preserves fp, exc, crs", 9}, theta_preserves},
      {{"theta-forms-agree", "recursive theta = phi_inv o psi; last insertion at min non-excedance", 8}, theta_forms_agree},
      {{"theta-inverse", "theta_inverse o theta = id and theta o theta_inverse = id", 8}, theta_inverse_roundtrip},
      {{"statistic-exchange", "(fp, exc) = (ct, rt) through psi and phi_inv", 7}, statistic_exchange},
      {{"irreducibility", "p ⊕-irreducible iff theta(p) ⊗-irreducible", 8}, irreducibility},
      {{"component-counts", "⊕ components = centered multitunnels of psi = ⊗ components of theta", 7}, component_counts},
      {{"theta-sum-to-product", "theta(p1 ⊕ p2) = theta(p2) ⊗ theta(p1)", 7}, theta_sum_to_product},
      {{"prefix-arc-structure", "for p(n) = k < i < n: (p(i) < k and p^-1(i) < i) or p^-1(i) < i < p(i)", 7}, prefix_arc_structure},
      {{"irreducible-insertion-delta", "delta(theta(pi), n-k+j, j) = delta(pi, n, k) for irreducible p", 7}, irreducible_insertion_delta},
      {{"irreducible-insertion-delta-values", "delta(pi, n, k) = n-k, or n-l-k when pi = alpha ⊕ 1..l", 7}, irreducible_insertion_delta_values},
      {{"gamma-identity", "gamma = theta o rci; gamma preserves fp, exc, crs", 8}, gamma_identity},
      {{"table-values", "n = 4 crs and nes distributions for each pattern of length 3", 4}, table_values},
      {{"cfrac-crs-nes", "crs/nes continued fraction matches S_n enumeration", 8}, cfrac_crs_nes},
      {{"cfrac-qp", "q,p continued fraction matches the Catalan recurrence at two depths", 10}, cfrac_qp},
      {{"catalan-avoiders", "C_n(q,p) = exc/crs distribution over S_n(321), S_n(132), S_n(213)", 9}, catalan_avoiders},
      {{"fp-exc-crs-equidistribution", "fp/exc/crs distribution equal over 321, 132, 213 avoiders", 8}, fp_exc_crs_equidistribution},
      {{"inv-identity", "I_n recurrence = C_n(q,q) = inv distribution over S_n(321)", 9}, inv_identity},
      {{"poly-arithmetic-laws", "commutative, associative, distributive on random triples", 10}, poly_arithmetic_laws},
  };
  return checks;
}

CheckResult run_registered(const Registered& r, const SuiteOptions& options) {
  Ctx ctx(std::min(r.info.bound, options.n_max), options);
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    r.run(ctx);
    result = ctx.result(r.info.name);
  } catch (const std::exception& e) {
    result = ctx.result(r.info.name);
    result.passed = false;
    ++result.failures;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

const std::vector<CheckInfo>& identity_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

CheckResult run_check(std::string_view name, const SuiteOptions& options) {
  for (const auto& r : registry()) {
    if (r.info.name == name) return run_registered(r, options);
  }
  throw std::out_of_range("unknown check: " + std::string(name));
}

std::vector<CheckResult> run_identity_suite(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& r : registry()) out.push_back(run_registered(r, options));
  return out;
}

}  // namespace permlab
