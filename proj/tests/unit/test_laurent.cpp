#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "heckelab/laurent.hpp"

using heckelab::Integer;
using heckelab::LaurentPoly;
using heckelab::testing::random_poly;

namespace {
const LaurentPoly v = heckelab::v();
const LaurentPoly vi = heckelab::v_inv();
}  // namespace

TEST_CASE("add") {
  CHECK(v + vi == LaurentPoly{{1, 1}, {-1, 1}});
  CHECK((v + (-v)).is_zero());
  CHECK((v + (-v)).terms().empty());
  CHECK((v + LaurentPoly::v_pow(3)) + v == LaurentPoly{{1, 2}, {3, 1}});
}

TEST_CASE("mul") {
  CHECK((v + vi) * v == LaurentPoly{{2, 1}, {0, 1}});
  CHECK((v - vi) * (v + vi) == LaurentPoly{{2, 1}, {-2, -1}});
  LaurentPoly p{{-3, 2}, {5, -7}};
  CHECK((LaurentPoly() * p).is_zero());
  CHECK((p * LaurentPoly()).is_zero());
}

TEST_CASE("bar and twist") {
  CHECK(v.bar() == vi);
  CHECK((v + vi).bar() == v + vi);
  CHECK(LaurentPoly({{2, 3}, {1, -1}}).bar() == LaurentPoly({{-2, 3}, {-1, -1}}));

  CHECK(v.twist() == -vi);
  CHECK((v + vi).twist() == -v - vi);
  CHECK(LaurentPoly::v_pow(2).twist() == LaurentPoly::v_pow(-2));
}

TEST_CASE("coeff and in_strict_positive") {
  LaurentPoly p{{1, 1}, {3, 1}};
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(0) == 0);
  CHECK(LaurentPoly({{-1, 2}}).coeff(-1) == 2);

  CHECK(LaurentPoly({{1, 1}, {3, 2}}).in_strict_positive());
  CHECK_FALSE((LaurentPoly(1) + v).in_strict_positive());
  CHECK(LaurentPoly().in_strict_positive());
}

TEST_CASE("valuation and degree") {
  LaurentPoly p{{-2, 1}, {4, 3}};
  CHECK(p.valuation() == -2);
  CHECK(p.degree() == 4);
  CHECK(p.valuation() <= p.degree());
  CHECK_THROWS(LaurentPoly().degree());
}

TEST_CASE("coefficients are arbitrary precision") {
  LaurentPoly big = LaurentPoly::monomial(Integer(1) << 80, 2);
  LaurentPoly sq = big * big;
  CHECK(sq.coeff(4) == (Integer(1) << 160));
  CHECK(LaurentPoly::parse(sq.to_string()) == sq);
}

TEST_CASE("string form") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly({{-1, 1}, {3, 2}}).to_string() == "v^-1 + 2*v^3");
  CHECK(LaurentPoly({{0, 1}, {1, -1}}).to_string() == "1 - v");
  CHECK(LaurentPoly({{-2, -1}}).to_string() == "-v^-2");
  CHECK(LaurentPoly::parse("v^-1 + 2*v^3") == LaurentPoly({{-1, 1}, {3, 2}}));
  CHECK(LaurentPoly::parse("-3") == LaurentPoly(-3));
  CHECK_THROWS(LaurentPoly::parse("v^"));
  CHECK_THROWS(LaurentPoly::parse("2 v"));
  CHECK_THROWS(LaurentPoly::parse(""));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("involutions on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK(a.twist().twist() == a);
    CHECK(a.bar().twist() == a.twist().bar());
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a * b).twist() == a.twist() * b.twist());
    for (int k = -6; k <= 6; ++k) CHECK((a + b).coeff(k) == a.coeff(k) + b.coeff(k));
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
}

TEST_CASE("canonical form has no zero terms") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng) * random_poly(rng) - random_poly(rng);
    int prev = std::numeric_limits<int>::min();
    for (const auto& [k, c] : a.terms()) {
      CHECK(c != 0);
      CHECK(k > prev);
      prev = k;
    }
  }
}
