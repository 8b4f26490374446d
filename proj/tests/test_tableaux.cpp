#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"
#include "permlab/tableaux.hpp"

using namespace permlab;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

using Rows = std::vector<std::vector<int>>;

// Longest decreasing subsequence by O(n^2) dynamic programming.
std::size_t lds(const oracle::Word& w) {
  std::vector<std::size_t> best(w.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("rsk of 2 4 1 3 5 8 6 7") {
  const auto t = rsk(P("2 4 1 3 5 8 6 7"));
  CHECK(t.p.rows == Rows{{1, 3, 5, 6, 7}, {2, 4, 8}});
  CHECK(t.q.rows == Rows{{1, 2, 5, 6, 8}, {3, 4, 7}});
  CHECK(t.p.shape() == std::vector<std::size_t>{5, 3});
  CHECK(t.p.row_of(8) == 2);
  CHECK(t.p.row_of(9) == 0);
}

TEST_CASE("rsk of the identity is a single row") {
  const auto t = rsk(Permutation::identity(5));
  CHECK(t.p.rows == Rows{{1, 2, 3, 4, 5}});
  CHECK(t.q == t.p);
  CHECK(rsk(Permutation{}).p.rows.empty());
}

TEST_CASE("rsk duality, row count and inverse") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      const Permutation p(w);
      const auto t = rsk(p);
      if (n <= 5) {
        const auto ti = rsk(inverse(p));
        CHECK(ti.p == t.q);
        CHECK(ti.q == t.p);
      }
      CHECK(t.p.row_count() == lds(w));
      CHECK(t.p.shape() == t.q.shape());
      CHECK(rsk_inverse(t) == p);
    }
  }
}

TEST_CASE("two rows iff 321-avoiding") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      CHECK((rsk(Permutation(w)).p.row_count() <= 2) == !oracle::contains(w, {3, 2, 1}));
    }
  }
}

TEST_CASE("matching examples") {
  CHECK(matching(P("2 4 1 3 5 8 6 7")) == Matching{{2, 3}, {4, 4}, {8, 7}});
  CHECK(matching(P("4 1 5 2 6 3")) == Matching{{4, 2}, {5, 4}, {6, 6}});
  CHECK(matching(Permutation::identity(4)).empty());
}

TEST_CASE("matching equals the second rows on 321-avoiders") {
  const std::vector<Permutation> pats{P("3 2 1")};
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_avoider(n, pats, [](const Permutation& p) {
      const auto m = matching(p);
      const auto t = rsk(p);
      std::vector<int> values, positions;
      for (const auto& pr : m) {
        values.push_back(pr.value);
        positions.push_back(static_cast<int>(pr.position));
      }
      const std::vector<int> none;
      CHECK(values == (t.p.rows.size() > 1 ? t.p.rows[1] : none));
      CHECK(positions == (t.q.rows.size() > 1 ? t.q.rows[1] : none));
    });
  }
}

TEST_CASE("321-avoiders are bi-increasing") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& w : oracle::avoiders(n, {{3, 2, 1}})) {
      int last_exc = 0, last_non = 0;
      for (int i = 1; i <= n; ++i) {
        const int v = oracle::at(w, i);
        if (v > i) {
          CHECK(v > last_exc);
          last_exc = v;
        } else {
          CHECK(v > last_non);
          last_non = v;
        }
      }
    }
  }
}

TEST_CASE("psi examples") {
  CHECK(psi(P("2 4 1 3 5 8 6 7")).to_string() == "ududuuuddudduudd");
  CHECK(psi(Permutation::identity(3)).to_string() == "uuuddd");
  CHECK_THROWS_AS(psi(P("3 2 1")), DomainError);
  CHECK(psi_inv(DyckPath::parse("ududuuuddudduudd")) == P("2 4 1 3 5 8 6 7"));
  CHECK(psi_inv(DyckPath::parse("uuuddd")) == Permutation::identity(3));
}

TEST_CASE("psi is a bijection S_n(321) -> D_n with a half balance") {
  const std::vector<Permutation> pats{P("3 2 1")};
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<DyckPath> seen;
    for_each_avoider(n, pats, [&](const Permutation& p) {
      const auto d = psi(p);
      seen.insert(d);
      CHECK(psi_inv(d) == p);
      const auto [l, r] = halves(d);
      CHECK(std::count(l.begin(), l.end(), Step::down) == std::count(r.begin(), r.end(), Step::up));
    });
    CHECK(seen.size() == oracle::catalan(static_cast<int>(n)));
  }
}
