#include <doctest.h>

#include <random>
#include <stdexcept>

#include "permlab/poly.hpp"

using namespace permlab;

namespace {

MultiPoly V(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly C(long c) { return MultiPoly::constant(c); }

MultiPoly random_poly(std::mt19937& rng) {
  static const std::vector<std::string> names{"x", "y", "q"};
  MultiPoly out;
  const int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    MultiPoly m = C(static_cast<long>(rng() % 7) - 3);
    for (const auto& v : names) m = m.shifted(v, static_cast<unsigned>(rng() % 3));
    out += m;
  }
  return out;
}

}  // namespace

TEST_CASE("construction and printing") {
  CHECK(C(0).is_zero());
  CHECK(C(0).pretty() == "0");
  CHECK(C(14).pretty() == "14");
  CHECK(V("x").pretty() == "x");
  CHECK((C(7) + V("x").scaled(6) + V("x") * V("x")).pretty() == "7+6x+x²");
  const auto q = V("q"), p = V("p");
  CHECK((C(1) + q.scaled(2) + q * q + q * p).pretty() == "1+2q+q²+qp");
  CHECK((C(1) - V("y")).pretty() == "1-y");
  CHECK(V("x").shifted("x", 11).pretty() == "x¹²");
}

TEST_CASE("canonical orders") {
  CHECK(variable_less("x", "y"));
  CHECK(variable_less("y", "q"));
  CHECK(variable_less("q", "p"));
  CHECK(variable_less("p", "z"));
  CHECK(variable_less("z", "a"));
  CHECK(variable_less("a", "b"));
  CHECK_FALSE(variable_less("x", "x"));

  const auto x = V("x"), y = V("y");
  const auto s = (x + y) * (x + y) + x + y + C(1);
  CHECK(s.vars() == std::vector<std::string>{"x", "y"});
  CHECK(s.pretty() == "1+x+y+x²+2xy+y²");
  CHECK(union_vars({"q", "x"}, {"y", "x"}) == std::vector<std::string>{"x", "y", "q"});
}

TEST_CASE("arithmetic examples") {
  const auto q = V("q"), p = V("p");
  CHECK((C(1) + q) * (C(1) + q) == C(1) + q.scaled(2) + q * q);
  CHECK((q * p).substitute("p", std::string("q")) == q * q);
  CHECK((q * p).substitute("p", BigInt(3)) == q.scaled(3));
  CHECK((q - q).is_zero());
  CHECK(((V("x") + V("y").scaled(2)).renamed({{"x", "y"}, {"y", "x"}})) ==
        V("y") + V("x").scaled(2));
  const auto c3 = C(1) + q.scaled(2) + q * q + q * p;
  CHECK(c3.coefficient_of({{"q", 1}, {"p", 1}}) == 1);
  CHECK(c3.coefficient_of({{"q", 1}}) == 2);
  CHECK(c3.coefficient_of({{"z", 1}}) == 0);
  CHECK(c3.degree_in("q") == 2);
  CHECK(c3.degree_in("p") == 1);
  CHECK(c3.evaluate_all(1) == 5);
}

TEST_CASE("equality aligns variable sets") {
  const auto a = C(3);
  const auto b = MultiPoly::constant(3, {"x", "y"});
  CHECK(a == b);
  CHECK(b.trimmed().vars().empty());
  CHECK(V("x").with_vars({"y", "x"}).vars() == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(V("x") == V("y"));
}

TEST_CASE("big coefficients do not wrap") {
  MultiPoly t = C(1) + V("x");
  MultiPoly acc = C(1);
  for (int i = 0; i < 80; ++i) acc *= t;
  const BigInt mid = acc.coefficient_of({{"x", 40}});
  CHECK(to_string(mid) == "107507208733336176461620");
  CHECK(acc.evaluate_all(1) == (BigInt(1) << 80));
}

TEST_CASE("exponent overflow is an error") {
  const auto big = V("x").shifted("x", 0xFFFFFFFEu);
  CHECK_THROWS_AS(big * V("x") * V("x"), std::overflow_error);
}

TEST_CASE("property: ring laws on random triples") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * C(1) == a);
    const auto ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) CHECK(coeff != 0);
  }
}
