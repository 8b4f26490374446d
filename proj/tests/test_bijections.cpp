#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/bijections.hpp"
#include "permlab/dyck.hpp"
#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"
#include "permlab/statistics.hpp"
#include "permlab/tableaux.hpp"

using namespace permlab;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

const std::vector<Permutation>& p321() {
  static const std::vector<Permutation> v{Permutation{3, 2, 1}};
  return v;
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta_composed(P("2 4 1 3 5 8 6 7")) == P("7 8 5 3 4 6 2 1"));
  CHECK(theta_composed(P("4 1 6 2 7 3 5")) == P("7 6 5 2 1 3 4"));
  CHECK(theta_composed(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(theta_recursive(P("1")) == P("1"));
  CHECK_THROWS_AS(theta_composed(P("3 2 1")), DomainError);
  CHECK_THROWS_AS(theta_recursive(P("3 2 1")), DomainError);
}

TEST_CASE("recursive trace of 4 1 6 2 7 3 5") {
  ThetaTrace trace;
  const auto img = theta_recursive(P("4 1 6 2 7 3 5"), &trace);
  CHECK(img == P("7 6 5 2 1 3 4"));
  REQUIRE(trace.size() == 7);
  CHECK(trace[0].l == 1);
  CHECK_FALSE(trace[0].insertion.has_value());
  CHECK(trace[0].image == P("1"));
  const std::vector<std::pair<std::size_t, int>> ins = {{2, 1}, {2, 2}, {3, 1},
                                                        {3, 3}, {4, 1}, {4, 2}};
  for (std::size_t r = 1; r < trace.size(); ++r) {
    CHECK(trace[r].l == r + 1);
    REQUIRE(trace[r].insertion.has_value());
    CHECK(*trace[r].insertion == ins[r - 1]);
    CHECK(trace[r].image == insert_at(trace[r - 1].image, ins[r - 1].first, ins[r - 1].second));
  }
  CHECK(trace[2].reduced_prefix == P("2 1 3"));
  CHECK(trace.back().image == img);
}

TEST_CASE("theta inverse") {
  CHECK(theta_inverse(P("7 6 5 2 1 3 4")) == P("4 1 6 2 7 3 5"));
  // First unwind: k = 4, alpha(4) = 2, beta = 6 5 4 1 2 3, insertion (7, 5).
  const auto beta = theta_inverse(P("6 5 4 1 2 3"));
  CHECK(insert_at(beta, 7, 5) == P("4 1 6 2 7 3 5"));
  CHECK_THROWS_AS(theta_inverse(P("1 3 2")), DomainError);
}

TEST_CASE("theta forms agree, invert, and preserve (fp, exc, crs)") {
  const Permutation p132{1, 3, 2};
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<Permutation> images;
    for_each_avoider(n, p321(), [&](const Permutation& s) {
      const auto t = theta_recursive(s);
      CHECK(t == theta_composed(s));
      CHECK(avoids(t, p132));
      CHECK(theta_inverse(t) == s);
      const auto a = statistics(s), b = statistics(t);
      CHECK(a.fp == b.fp);
      CHECK(a.exc == b.exc);
      CHECK(a.crs == b.crs);
      images.insert(t);
    });
    CHECK(images.size() == oracle::catalan(static_cast<int>(n)));
  }
}

TEST_CASE("insertion position is the minimum non-excedance of the image") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_avoider(n, p321(), [&](const Permutation& s) {
      ThetaTrace trace;
      const auto t = theta_recursive(s, &trace);
      std::size_t k = 0;
      for (std::size_t i = 1; i <= n && k == 0; ++i) {
        if (t(i) <= static_cast<int>(i)) k = i;
      }
      CHECK(trace.back().insertion->first == k);
    });
  }
}

TEST_CASE("m_step") {
  CHECK(m_step(P("6 5 2 1 7 3 4")) == P("6 5 7 1 3 2 4"));
  CHECK(m_step(P("6 5 7 1 3 2 4")) == P("6 5 7 3 2 1 4"));
  CHECK(m_step(P("4 1 6 2 7 3 5")) == P("6 1 5 2 7 3 4"));
  CHECK(m_step(P("3 2 1")) == P("3 2 1"));
}

TEST_CASE("gamma") {
  GammaTrace trace;
  CHECK(gamma(P("4 1 6 2 7 3 5"), &trace) == P("6 5 7 3 2 1 4"));
  REQUIRE(trace.size() >= 2);
  CHECK(trace.front() == P("4 1 6 2 7 3 5"));
  CHECK(trace.back() == P("6 5 7 3 2 1 4"));
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] == m_step(trace[i - 1]));
    CHECK(inversions(trace[i]) > inversions(trace[i - 1]));
  }
  CHECK(gamma(Permutation::identity(4)) == Permutation::identity(4));
  CHECK_THROWS_AS(gamma(P("3 2 1")), DomainError);
}

TEST_CASE("gamma is theta after rci") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_avoider(n, p321(), [](const Permutation& s) {
      const auto g = gamma(s);
      CHECK(g == theta_composed(reverse_complement_inverse(s)));
      const auto a = statistics(s), b = statistics(g);
      CHECK(a.fp == b.fp);
      CHECK(a.exc == b.exc);
      CHECK(a.crs == b.crs);
    });
  }
}

TEST_CASE("theta of a direct sum is a direct product") {
  CHECK(theta_sum_product(P("1"), P("1")).lhs == P("1 2"));
  CHECK(theta_sum_product(P("1"), P("1")).equal);
  CHECK(theta_sum_product(P("2 4 1 3"), P("1")).equal);
  for (std::size_t n1 = 1; n1 <= 5; ++n1) {
    for (std::size_t n2 = 1; n1 + n2 <= 7; ++n2) {
      for (const auto& a : enumerate_avoiders(n1, p321())) {
        for (const auto& b : enumerate_avoiders(n2, p321())) {
          const auto r = theta_sum_product(a, b);
          CHECK(r.equal);
          CHECK(r.lhs == r.rhs);
        }
      }
    }
  }
}

TEST_CASE("component counts agree across theta") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_avoider(n, p321(), [](const Permutation& s) {
      const auto sums = sum_components(s).size();
      CHECK(centered_multitunnels(psi(s)).size() == sums);
      CHECK(product_components(theta_composed(s)).size() == sums);
    });
  }
}
