#include <gtest/gtest.h>

#include <random>

#include "psb/psb.hpp"

using namespace psb;

namespace {

RingPtr Y(std::size_t n = 2) { return make_ring("y", n); }
Polynomial P(const std::string& s, std::size_t n = 2) { return parse_polynomial(s, Y(n)); }
ParamIdeal I(const std::string& s, std::size_t n = 2) { return ParamIdeal(Y(n), parse_polynomial_list(s, Y(n))); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, int terms = 3, int deg = 3) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<std::int32_t> e(R->nvars());
    for (auto& x : e) x = static_cast<std::int32_t>(rng() % (deg + 1));
    ts.push_back({ExponentVector(std::move(e)), Rational(static_cast<long>(rng() % 7) - 3)});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

}  // namespace

TEST(GroebnerY, ReducedBasisExample) {
  const auto Q = I("y1-y2, y2");
  const auto& g = groebner_y(Q);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], P("y1"));
  EXPECT_EQ(g[1], P("y2"));
}

TEST(GroebnerY, ZeroIdealHasEmptyBasis) {
  const auto Z = ParamIdeal::zero(Y());
  EXPECT_TRUE(groebner_y(Z).empty());
  EXPECT_TRUE(ParamIdeal(Y(), {P("0")}).is_zero_ideal());
}

TEST(GroebnerY, UnitIdeal) {
  EXPECT_TRUE(I("y1, y1+1").is_unit());
  EXPECT_FALSE(I("y1^2+y2^3").is_unit());
}

TEST(GroebnerY, LocalOrderRejected) {
  EXPECT_THROW(ParamIdeal(make_ring("y", 2, MonomialOrder::valuation_compatible(2))), EngineError);
}

TEST(GroebnerY, IdempotentOnReducedBasis) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const auto R = Y(3);
    ParamIdeal Q(R, {random_poly(rng, R), random_poly(rng, R)});
    const auto& g = Q.groebner();
    EXPECT_EQ(ParamIdeal(R, g).groebner(), g);
    EXPECT_EQ(Q.key(), ParamIdeal(R, g).key());
  }
}

TEST(CoeffNormalForm, Example) {
  EXPECT_EQ(coeff_normal_form(P("y1^2+y2^3+y1"), I("y1^2+y2^3")), P("y1"));
}

TEST(CoeffNormalForm, ZeroIdealIsIdentity) {
  EXPECT_EQ(coeff_normal_form(P("y1^2+3"), ParamIdeal::zero(Y())), P("y1^2+3"));
}

TEST(CoeffNormalForm, DifferenceLiesInIdeal) {
  std::mt19937_64 rng(4);
  const auto R = Y(3);
  for (int k = 0; k < 40; ++k) {
    ParamIdeal Q(R, {random_poly(rng, R), random_poly(rng, R, 2, 2)});
    const auto c = random_poly(rng, R, 4, 4);
    const auto r = coeff_normal_form(c, Q);
    EXPECT_TRUE(is_member(c - r, Q));
    EXPECT_EQ(coeff_normal_form(r, Q), r);
    // no term of r is divisible by a leading monomial of the basis
    for (const auto& t : r.terms())
      for (const auto& g : Q.groebner()) EXPECT_FALSE(g.lead_exp().divides(t.exp));
  }
}

TEST(IsMember, Examples) {
  const auto Q = I("y1^2+y2^3");
  EXPECT_TRUE(is_member(P("y1^3+y1*y2^3"), Q));
  EXPECT_FALSE(is_member(P("y1"), Q));
  EXPECT_TRUE(is_member(P("0"), ParamIdeal::zero(Y())));
}

TEST(InRadical, Examples) {
  EXPECT_FALSE(in_radical(P("y2"), I("y1^2+y2^3")));
  EXPECT_TRUE(in_radical(P("y1"), I("y1^3")));
  EXPECT_TRUE(in_radical(P("y1+y2"), I("y1^2, y2^5")));
  EXPECT_TRUE(in_radical(P("1"), I("1")));
  EXPECT_FALSE(in_radical(P("1"), I("y1")));
}

// h in sqrt(Q) iff h^i in Q for some i; for these small ideals i <= 8 suffices.
TEST(InRadical, AgreesWithPowerSearch) {
  std::mt19937_64 rng(5);
  const auto R = Y(2);
  int hits = 0;
  for (int k = 0; k < 40; ++k) {
    auto gens = parse_polynomial_list(k % 2 ? "y1^3" : "y1^2*y2, y2^2", R);
    gens.push_back(random_poly(rng, R, 1, 2));
    ParamIdeal Q(R, gens);
    const auto h = random_poly(rng, R, 2, 1);
    bool power = false;
    Polynomial hi = Polynomial::constant(R, 1);
    for (int i = 1; i <= 8 && !power; ++i) {
      hi *= h;
      power = is_member(hi, Q);
    }
    if (power) ++hits;
    EXPECT_EQ(in_radical(h, Q), power) << to_string(h) << " / " << Q.key();
  }
  EXPECT_GT(hits, 0);
}

TEST(IdealIntersect, Example) {
  const auto J = ideal_intersect(I("y1"), I("y2"));
  EXPECT_EQ(J, I("y1*y2"));
}

TEST(IdealIntersect, WithZeroAndUnit) {
  EXPECT_TRUE(ideal_intersect(I("y1"), ParamIdeal::zero(Y())).groebner().empty());
  EXPECT_EQ(ideal_intersect(I("y1^2, y2"), ParamIdeal::unit(Y())), I("y1^2, y2"));
}

TEST(IdealIntersect, ContainedInBothContainsProduct) {
  std::mt19937_64 rng(6);
  const auto R = Y(2);
  for (int k = 0; k < 20; ++k) {
    ParamIdeal A(R, {random_poly(rng, R, 2, 2)});
    ParamIdeal B(R, {random_poly(rng, R, 2, 2), random_poly(rng, R, 1, 2)});
    const auto J = ideal_intersect(A, B);
    EXPECT_TRUE(A.contains(J));
    EXPECT_TRUE(B.contains(J));
    for (const auto& a : A.generators())
      for (const auto& b : B.generators()) EXPECT_TRUE(J.contains(a * b));
  }
}

TEST(CoefficientFactors, SplitsVariablesAndSquarefreePart) {
  const auto fs = coefficient_factors(P("4*y1^2*y2*(y1+y2)^2"));
  std::vector<Polynomial> want{P("y1"), P("y2"), P("y1+y2")};
  sort_unique_canonical(want);
  EXPECT_EQ(fs, want);
}

TEST(CoefficientFactors, ConstantHasNoFactors) { EXPECT_TRUE(coefficient_factors(P("-3")).empty()); }

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(canonical_coefficient(squarefree_part(P("(y1+1)^3*y2^2"))), canonical_coefficient(P("(y1+1)*y2")));
  EXPECT_EQ(canonical_coefficient(polynomial_gcd(P("y1^2-y2^2"), P("y1^2+2*y1*y2+y2^2"))), canonical_coefficient(P("y1+y2")));
}
