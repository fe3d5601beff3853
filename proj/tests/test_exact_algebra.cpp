#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "voroshire/exact_poly.hpp"

using namespace voroshire;
namespace vt = voroshire::testing;

namespace {
ExactPoly P(std::initializer_list<long> coeffs) {
  std::vector<GaussRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return ExactPoly(std::move(c));
}
}  // namespace

TEST_CASE("gauss rational field operations are exact") {
  GaussRational a(mpq_class(3, 4), mpq_class(-1, 2));
  GaussRational b(mpq_class(-2, 7), mpq_class(5, 3));
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == GaussRational(1));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  CHECK_THROWS_AS(GaussRational().inverse(), std::domain_error);

  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    GaussRational x = vt::random_rational(rng), y = vt::random_rational(rng);
    if (y.is_zero()) continue;
    CHECK((x / y) * y == x);
    CHECK(x.norm2() == (x * x.conj()).re());
  }
}

TEST_CASE("gauss rational string round trip") {
  for (const char* text : {"0", "1", "-1", "3/4", "-3/4+1/2i", "i", "-i", "2i", "-5/3i",
                           "1/2 - 7/11 i", "10+0i"}) {
    GaussRational v = GaussRational::parse(text);
    CHECK(GaussRational::parse(v.to_string()) == v);
  }
  CHECK(GaussRational::parse("3/6").to_string() == "1/2");  // canonical reduced form
  CHECK(GaussRational::parse("10+0i").to_string() == "10");
  CHECK_THROWS_AS(GaussRational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GaussRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(GaussRational::parse("2+3j"), std::invalid_argument);
  CHECK_THROWS_AS(GaussRational::parse("1++2i"), std::invalid_argument);
}

TEST_CASE("polynomial ring operations") {
  CHECK(P({-1, 0, 1}) * P({1, 0, 1}) == P({-1, 0, 0, 0, 1}));  // (z^2-1)(z^2+1) = z^4-1
  ExactPoly p = P({3, 1, 2});
  CHECK(p + ExactPoly::zero() == p);
  CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(ExactPoly::zero().degree() == ExactPoly::kZeroDegree);
}

TEST_CASE("derivative") {
  CHECK(P({0, 0, 0, 1}).derivative() == P({0, 0, 3}));  // z^3 -> 3z^2
  CHECK(P({7}).derivative().is_zero());
  CHECK(P({-1, 0, 0, 0, 1}).derivative() == P({0, 0, 0, 4}));  // z^4-1 -> 4z^3

  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    ExactPoly f = vt::random_poly(rng, 6), g = vt::random_poly(rng, 5);
    CHECK((f + g).derivative() == f.derivative() + g.derivative());
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("division with remainder") {
  auto [q1, r1] = ExactPoly::divrem(P({0, 0, 0, 1}), P({-1, 0, 1}));
  CHECK(q1 == P({0, 1}));
  CHECK(r1 == P({0, 1}));
  auto [q2, r2] = ExactPoly::divrem(P({-1, 0, 1}), P({-1, 1}));
  CHECK(q2 == P({1, 1}));
  CHECK(r2.is_zero());
  auto [q3, r3] = ExactPoly::divrem(P({3, 0, 4, 0, 1}), P({-1, 0, 1}));
  CHECK(q3 == P({5, 0, 1}));
  CHECK(r3 == P({8}));
  CHECK_THROWS_AS(ExactPoly::divrem(P({1}), ExactPoly::zero()), std::domain_error);

  std::mt19937 rng(13);
  for (int t = 0; t < 120; ++t) {
    ExactPoly p = vt::random_poly(rng, 1 + static_cast<int>(rng() % 12));
    ExactPoly d = vt::random_poly(rng, static_cast<int>(rng() % 6));
    if (d.is_zero()) continue;
    auto [q, r] = ExactPoly::divrem(p, d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("monic gcd") {
  CHECK(ExactPoly::gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(ExactPoly::gcd(P({1, 0, 1}), P({-1, 0, 1})) == P({1}));
  // ((z-1)^2 (z+2), (z-1)(z+3)) -> z-1, built from the factorizations
  ExactPoly lhs = P({-1, 1}) * P({-1, 1}) * P({2, 1});
  ExactPoly rhs = P({-1, 1}) * P({3, 1});
  CHECK(ExactPoly::gcd(lhs, rhs) == P({-1, 1}));
  CHECK_THROWS_AS(ExactPoly::gcd(ExactPoly::zero(), ExactPoly::zero()), std::domain_error);

  std::mt19937 rng(14);
  for (int t = 0; t < 60; ++t) {
    ExactPoly a = vt::random_poly(rng, 3), b = vt::random_poly(rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    ExactPoly g = ExactPoly::gcd(a, b);
    CHECK(ExactPoly::divrem(a, g).remainder.is_zero());
    CHECK(ExactPoly::divrem(b, g).remainder.is_zero());
    CHECK(g.leading_coefficient().is_one());
    ExactPoly common = vt::random_poly(rng, 2);
    if (common.is_zero()) continue;
    ExactPoly g2 = ExactPoly::gcd(a * common, b * common);
    CHECK(ExactPoly::divrem(g2, common.monic()).remainder.is_zero());
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(GaussRational(mpq_class(22, 7)), 0) == GaussRational(1));
  CHECK(falling_factorial(3L, 2) == GaussRational(6));
  CHECK(falling_factorial(-2L, 2) == GaussRational(6));  // (-2)(-3)

  std::mt19937 rng(15);
  for (int t = 0; t < 100; ++t) {
    GaussRational x = vt::random_rational(rng, 6, 4);
    unsigned j = rng() % 9, k = rng() % 9;
    CHECK(falling_factorial(x, j + k) ==
          falling_factorial(x, j) * falling_factorial(x - GaussRational(static_cast<long>(j)), k));
  }
}

TEST_CASE("evaluation") {
  CHECK(P({-1, 0, 1}).evaluate(GaussRational(1)).is_zero());
  CHECK(P({-1, 0, 1}).evaluate(GaussRational(0)) == GaussRational(-1));
  CHECK(P({3, 0, 4, 0, 1}).evaluate(GaussRational::i()).is_zero());
}
