#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "voroshire/iterate.hpp"

using namespace voroshire;
namespace vt = voroshire::testing;

namespace {

ExactPoly P(std::initializer_list<long> coeffs) {
  std::vector<GaussRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

OperatorSymbol Q(std::initializer_list<long> coeffs) {
  std::vector<GaussRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return OperatorSymbol(std::move(c));
}

RationalFn one_over_z2_minus_1() {
  return RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(1), GaussRational(-1)});
}

// independent closed-form assembly with an arbitrary coefficient table,
// used both as an oracle and for fault injection
ExactPoly assemble(const std::vector<GaussRational>& p, const std::vector<ExactPoly>& A,
                   const ExactPoly& B, unsigned mn) {
  ExactPoly acc;
  for (unsigned k = 0; k <= mn; ++k)
    if (!p[k].is_zero()) acc += A[k] * B.pow(mn - k) * p[k];
  return acc;
}

}  // namespace

TEST_CASE("symbol construction derives order data") {
  OperatorSymbol q1 = Q({1, 0, 1});
  CHECK(q1.order() == 2);
  CHECK(q1.vanishing_order() == 0);
  CHECK(q1.first_nonzero() == GaussRational(1));

  OperatorSymbol q2 = Q({0, 2, 0, 1});
  CHECK(q2.order() == 3);
  CHECK(q2.vanishing_order() == 1);
  CHECK(q2.first_nonzero() == GaussRational(2));

  OperatorSymbol q3 = Q({0, 0, 1});
  CHECK(q3.vanishing_order() == 2);
  CHECK(q3.is_pure_derivative());

  CHECK_THROWS_AS(OperatorSymbol({GaussRational(1), GaussRational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(OperatorSymbol({}), std::invalid_argument);
  CHECK_THROWS_AS(OperatorSymbol({GaussRational(0)}), std::invalid_argument);
}

TEST_CASE("symbol powers") {
  CHECK(Q({1, 1}).power_coefficients(2) ==
        std::vector<GaussRational>{GaussRational(1), GaussRational(2), GaussRational(1)});
  CHECK(Q({1, 0, 1}).power_coefficients(0) == std::vector<GaussRational>{GaussRational(1)});

  // q = x^2+3x squared, against plain polynomial multiplication
  OperatorSymbol q = Q({0, 3, 1});
  ExactPoly as_poly = P({0, 3, 1});
  auto p2 = q.power_coefficients(2);
  ExactPoly squared = as_poly * as_poly;
  REQUIRE(p2.size() == 5);
  for (size_t k = 0; k < p2.size(); ++k) CHECK(p2[k] == squared[k]);

  std::mt19937 rng(21);
  for (int t = 0; t < 25; ++t) {
    OperatorSymbol rq = vt::random_symbol(rng, 1 + rng() % 3, 0);
    unsigned n = 1 + rng() % 5;
    auto pw = rq.power_coefficients(n);
    ExactPoly direct = ExactPoly(std::vector<GaussRational>(rq.coeffs())).pow(n);
    REQUIRE(static_cast<int>(pw.size()) - 1 == direct.degree());
    for (size_t k = 0; k < pw.size(); ++k) CHECK(pw[k] == direct[k]);
    CHECK(pw.back().is_one());
  }
}

TEST_CASE("polynomial part split") {
  RationalFn h1(P({0, 0, 0, 1}), P({-1, 0, 1}));  // z^3/(z^2-1)
  auto s1 = h1.split_polynomial_part();
  CHECK(s1.poly_part == P({0, 1}));
  CHECK(s1.proper_part.numer() == P({0, 1}));
  CHECK(s1.proper_part.denom() == P({-1, 0, 1}));

  RationalFn h2(P({0, 1}), P({-1, 0, 1}));
  auto s2 = h2.split_polynomial_part();
  CHECK(s2.poly_part.is_zero());
  CHECK(s2.proper_part.numer() == h2.numer());

  RationalFn h3(P({3, 0, 4, 0, 1}), P({-1, 0, 1}));
  auto s3 = h3.split_polynomial_part();
  auto oracle = ExactPoly::divrem(P({3, 0, 4, 0, 1}), P({-1, 0, 1}));
  CHECK(s3.poly_part == oracle.quotient);
  CHECK(s3.poly_part == P({5, 0, 1}));
  CHECK(s3.proper_part.numer() == P({8}));
}

TEST_CASE("death index of the polynomial part") {
  CHECK(polynomial_part_death_index(ExactPoly::zero(), Q({0, 1, 0, 1})) == 0);
  CHECK(polynomial_part_death_index(P({1, 1, 1, 1}), Q({0, 2, 0, 1})) == 4);   // r=1, deg 3
  CHECK(polynomial_part_death_index(P({1, 1, 1, 1}), Q({0, 0, 1, 1})) == 2);   // r=2, deg 3
  CHECK_THROWS_AS(polynomial_part_death_index(P({1}), Q({1, 1})), std::domain_error);
}

TEST_CASE("derivative numerators") {
  RationalFn inv_z = RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(0)});
  auto A1 = derivative_numerators(inv_z, 1);
  CHECK(A1[1] == P({-1}));

  RationalFn h = one_over_z2_minus_1();
  auto A = derivative_numerators(h, 1);
  CHECK(A[1] == P({0, -2}));
  // quotient-rule oracle A' B - A B' for the first step
  CHECK(A[1] == h.numer().derivative() * h.denom() - h.numer() * h.denom().derivative());
  // value at the pole 1: -2 = (-1)^1 1! A(1) B'(1)
  CHECK(A[1].evaluate(GaussRational(1)) == GaussRational(-2));
}

TEST_CASE("pole value identity") {
  auto all_ok = [](const std::vector<PoleValueCheck>& checks) {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  };
  CHECK(all_ok(pole_value_identity_check(one_over_z2_minus_1(), 3)));
  CHECK(all_ok(pole_value_identity_check(one_over_z2_minus_1(), 0)));
  RationalFn g = RationalFn::from_poles(P({2, 1}),
                                        {GaussRational(1), GaussRational(-1), GaussRational(3)});
  CHECK(all_ok(pole_value_identity_check(g, 4)));
}

TEST_CASE("closed-form iterate: pinned values") {
  RationalFn h = one_over_z2_minus_1();
  OperatorSymbol q = Q({1, 0, 1});

  IterateResult r1 = iterate_numerator_closed(h, q, 1);
  CHECK(r1.numer == P({3, 0, 4, 0, 1}));
  CHECK(r1.degree == 4);
  CHECK(r1.denom_power == 3);
  // oracle: q = x^2 + 1 applied once is h'' + h = (A_2 + A_0 B^2)/B^3
  auto A = derivative_numerators(h, 2);
  CHECK(r1.numer == A[2] + A[0] * h.denom() * h.denom());

  IterateResult r0 = iterate_numerator_closed(h, q, 0);
  CHECK(r0.numer == h.numer());
  CHECK(r0.denom_power == 1);

  RationalFn inv_z = RationalFn::from_poles(ExactPoly::constant(1), {GaussRational(0)});
  IterateResult rd = iterate_numerator_closed(inv_z, Q({0, 1}), 1);
  CHECK(rd.numer == P({-1}));
  CHECK(rd.degree == 0);
}

TEST_CASE("stepwise route equals closed route") {
  RationalFn h = one_over_z2_minus_1();
  OperatorSymbol q = Q({1, 0, 1});
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(iterate_numerator_closed(h, q, n).numer == iterate_numerator_stepwise(h, q, n).numer);

  RationalFn h8(P({8}), P({-1, 0, 1}));
  OperatorSymbol q2 = Q({0, 2, 0, 1});
  CHECK(iterate_numerator_closed(h8, q2, 2).numer == iterate_numerator_stepwise(h8, q2, 2).numer);
}

TEST_CASE("residues") {
  RationalFn h = one_over_z2_minus_1();
  CHECK(h.residue_at(0) == GaussRational(mpq_class(1, 2)));
  CHECK(h.residue_at(1) == GaussRational(mpq_class(-1, 2)));
  RationalFn h8 = RationalFn::from_poles(P({8}), {GaussRational(1), GaussRational(-1)});
  CHECK(h8.residue_at(0) == GaussRational(4));
}

TEST_CASE("degree, leading coefficient and coprimality on random instances") {
  std::mt19937 rng(22);
  int built = 0;
  while (built < 12) {
    const unsigned m = 1 + rng() % 3;
    const unsigned r = rng() % (m + 1);
    const int b = 2 + static_cast<int>(rng() % 3);
    const int a = r >= 1 ? static_cast<int>(rng() % b) : static_cast<int>(rng() % 6);
    RationalFn h = vt::random_instance(rng, a, b);
    OperatorSymbol q = vt::random_symbol(rng, m, r);
    for (unsigned n = 0; n <= 4; ++n) {
      IterateResult res = iterate_numerator_closed(h, q, n);  // identities verified inside
      CHECK(res.degree == a + static_cast<int>(n) * (b * static_cast<int>(m) - static_cast<int>(r)));
      CHECK(res.numer == iterate_numerator_stepwise(h, q, n).numer);
    }
    ++built;
  }
}

TEST_CASE("improper input with positive vanishing order") {
  OperatorSymbol q = Q({0, 2, 0, 1});  // r = 1
  RationalFn h(P({1, 0, 0, 0, 1}), P({-1, 0, 1}));
  CHECK_THROWS_AS(iterate_numerator_closed(h, q, 2), std::domain_error);
  CHECK_THROWS_AS(iterate_numerator_stepwise(h, q, 2), std::domain_error);

  auto split = h.split_polynomial_part();
  unsigned death = polynomial_part_death_index(split.poly_part, q);
  CHECK(death == 3);  // deg Q = 2, r = 1

  // at and beyond the death index the polynomial part leaves no trace
  for (unsigned n = death; n <= death + 1; ++n) {
    IterateResult full = iterate_full(h, q, n);
    IterateResult proper = iterate_numerator_closed(split.proper_part, q, n);
    CHECK(full.numer == proper.numer);
    CHECK(full.death_index == death);
  }
  // below it the numerator differs exactly by P(D)^n(poly part) B^(mn+1)
  IterateResult below = iterate_full(h, q, 1);
  ExactPoly tail = q.apply_to_polynomial(split.poly_part);
  IterateResult proper1 = iterate_numerator_closed(split.proper_part, q, 1);
  CHECK(below.numer == proper1.numer + tail * h.denom().pow(4));
}

TEST_CASE("semigroup property") {
  std::mt19937 rng(23);
  for (int t = 0; t < 6; ++t) {
    RationalFn h = vt::random_instance(rng, static_cast<int>(rng() % 2), 2 + rng() % 2);
    OperatorSymbol q = vt::random_symbol(rng, 1 + rng() % 2, 0);
    const unsigned n1 = 1 + rng() % 3, n2 = 1 + rng() % 3;
    IterateResult direct = iterate_numerator_closed(h, q, n1 + n2);
    NumeratorState state{iterate_numerator_closed(h, q, n1).numer,
                         q.order() * n1 + 1};
    for (unsigned s = 0; s < n2; ++s) state = apply_operator_once(state, h.denom(), q);
    CHECK(state.numer == direct.numer);
    CHECK(state.denom_power == direct.denom_power);
  }
}

TEST_CASE("pure derivative symbol reproduces the derivative numerators") {
  std::mt19937 rng(24);
  for (unsigned m = 1; m <= 3; ++m) {
    RationalFn h = vt::random_instance(rng, 1, 3);
    OperatorSymbol q = vt::random_symbol(rng, m, m);
    for (unsigned n = 1; n <= 3; ++n) {
      auto A = derivative_numerators(h, m * n);
      CHECK(iterate_numerator_closed(h, q, n).numer == A[m * n]);
    }
  }
}

TEST_CASE("fault injection: a corrupted power table breaks route equivalence") {
  RationalFn h = one_over_z2_minus_1();
  OperatorSymbol q = Q({1, 0, 1});
  const unsigned n = 3, mn = 6;
  auto p = q.power_coefficients(n);
  auto A = derivative_numerators(h, mn);

  CHECK(assemble(p, A, h.denom(), mn) == iterate_numerator_stepwise(h, q, n).numer);
  p[2] += GaussRational(1);  // corrupt one p_{n,k}
  CHECK(assemble(p, A, h.denom(), mn) != iterate_numerator_stepwise(h, q, n).numer);
}
