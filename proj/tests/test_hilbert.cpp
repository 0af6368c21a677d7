#include <gtest/gtest.h>

#include <random>

#include "psb/psb.hpp"

using namespace psb;

namespace {

ExponentVector ev(std::initializer_list<std::int32_t> v) { return ExponentVector(std::vector<std::int32_t>(v)); }

// All exponent vectors of length n with total degree <= r, built recursively.
void monomials_upto(std::size_t n, std::int64_t r, std::vector<std::int32_t>& cur,
                    std::vector<std::vector<std::int32_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::int32_t k = 0; k <= r; ++k) {
    cur.push_back(k);
    monomials_upto(n, r - k, cur, out);
    cur.pop_back();
  }
}

// Complement count with a plain componentwise-divisibility test.
std::int64_t brute_hs(std::size_t n, const std::vector<std::vector<std::int32_t>>& gens, std::int64_t r) {
  std::vector<std::vector<std::int32_t>> all;
  std::vector<std::int32_t> cur;
  monomials_upto(n, r, cur, all);
  std::int64_t c = 0;
  for (const auto& a : all) {
    bool inside = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i) div = div && g[i] <= a[i];
      inside = inside || div;
    }
    if (!inside) ++c;
  }
  return c;
}

std::vector<std::vector<std::int32_t>> random_gens(std::mt19937_64& rng, std::size_t n, int count, int max) {
  std::vector<std::vector<std::int32_t>> g(count, std::vector<std::int32_t>(n));
  for (auto& e : g)
    for (auto& v : e) v = static_cast<std::int32_t>(rng() % (max + 1));
  return g;
}

Staircase to_staircase(std::size_t n, const std::vector<std::vector<std::int32_t>>& g) {
  std::vector<ExponentVector> v;
  for (const auto& e : g) v.emplace_back(e);
  return Staircase(n, std::move(v));
}

}  // namespace

TEST(Staircase, KeepsMinimalGeneratorsSorted) {
  const Staircase E(2, {ev({2, 1}), ev({1, 0}), ev({0, 3}), ev({1, 0})});
  EXPECT_EQ(E.generators(), (std::vector<ExponentVector>{ev({0, 3}), ev({1, 0})}));
  EXPECT_TRUE(E.contains(ev({5, 0})));
  EXPECT_FALSE(E.contains(ev({0, 2})));
}

TEST(Staircase, WrongLengthRejected) { EXPECT_THROW(Staircase(2, {ev({1, 0, 0})}), DimensionError); }

TEST(HsFunction, EmptyStaircaseCountsAllMonomials) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t r = 0; r <= 6; ++r) EXPECT_EQ(Integer(hs_function(Staircase(n), r)), binomial(r + n, n));
}

TEST(HsFunction, Examples) {
  for (std::int64_t r = 0; r <= 10; ++r) {
    EXPECT_EQ(hs_function(Staircase(2, {ev({1, 0})}), r), r + 1);
    EXPECT_EQ(hs_function(Staircase(2, {ev({2, 0})}), r), r == 0 ? 1 : 2 * r + 1);
  }
  EXPECT_EQ(hs_function(Staircase(2, {ev({0, 0})}), 5), 0);
  EXPECT_EQ(hs_function(Staircase(2), -1), 0);
}

TEST(HsFunctionProperty, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 3;
    const auto g = random_gens(rng, n, 1 + static_cast<int>(rng() % 4), 4);
    const auto E = to_staircase(n, g);
    for (std::int64_t r = 0; r <= 8; ++r) EXPECT_EQ(hs_function(E, r), brute_hs(n, g, r));
  }
}

TEST(HsFunctionProperty, MonotoneUnderInclusion) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 50; ++k) {
    auto g = random_gens(rng, 3, 2, 3);
    const auto small = to_staircase(3, g);
    g.push_back(random_gens(rng, 3, 1, 3).front());
    const auto big = to_staircase(3, g);  // more generators: larger E, smaller complement
    for (std::int64_t r = 0; r <= 8; ++r) EXPECT_GE(hs_function(small, r), hs_function(big, r));
  }
}

TEST(AffineHilbertPoly, LinearExample) {
  const auto P = affine_hilbert_poly(Staircase(2, {ev({1, 0})}));
  EXPECT_EQ(P.coeffs.at(0), 1);
  EXPECT_EQ(P.coeffs.at(1), 1);
  EXPECT_EQ(P.degree(), 1);
  EXPECT_LE(P.stability_threshold, 2);
}

TEST(AffineHilbertPoly, ZeroDimensionalExample) {
  const auto P = affine_hilbert_poly(Staircase(2, {ev({2, 0}), ev({0, 2})}));
  EXPECT_EQ(P.degree(), 0);
  EXPECT_EQ(P(7), 4);
  EXPECT_EQ(P.stability_threshold, 2);
  EXPECT_EQ(hs_function(Staircase(2, {ev({2, 0}), ev({0, 2})}), 1), 3);
}

TEST(AffineHilbertPoly, CapEnforced) {
  std::vector<ExponentVector> g;
  for (std::int32_t k = 0; k < 6; ++k) g.push_back(ev({k, 5 - k}));
  EXPECT_THROW(affine_hilbert_poly(Staircase(2, g), 5), SizeCapError);
  EXPECT_NO_THROW(affine_hilbert_poly(Staircase(2, g), 6));
}

TEST(AffineHilbertPolyProperty, AgreesPastThreshold) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 3;
    const auto g = random_gens(rng, n, 1 + static_cast<int>(rng() % 5), 4);
    const auto E = to_staircase(n, g);
    const auto P = affine_hilbert_poly(E);
    const std::int64_t top = static_cast<std::int64_t>(n) * E.max_degree();
    EXPECT_LE(P.stability_threshold, top);
    for (std::int64_t r = P.stability_threshold; r <= top + 5; ++r) EXPECT_EQ(P(r), brute_hs(n, g, r)) << r;
    if (P.stability_threshold > 0) {
      EXPECT_NE(P(P.stability_threshold - 1), brute_hs(n, g, P.stability_threshold - 1));
    }
    for (std::int64_t r = 0; r <= top + 5; ++r) EXPECT_EQ(P(r).get_den(), 1);  // integer valued
  }
}

TEST(HomogeneousHilbertFunction, IsFirstDifference) {
  const Staircase E(2, {ev({2, 0})});
  EXPECT_EQ(homogeneous_hilbert_function(E, 0), 1);
  for (std::int64_t r = 1; r <= 6; ++r) EXPECT_EQ(homogeneous_hilbert_function(E, r), 2);
}

TEST(DegreeBound, Examples) {
  EXPECT_EQ(degree_bound(1, 2), 8);
  EXPECT_EQ(degree_bound(2, 2), 32);
  EXPECT_EQ(degree_bound(1, 1), 3);
  EXPECT_EQ(degree_bound(3, 2), 512);
}

TEST(DegreeBound, OddDegreeIsFloored) {
  EXPECT_EQ(degree_bound_exact(2, 1), make_rational(Integer(9), Integer(2)));
  EXPECT_EQ(degree_bound(2, 1), 4);
}

TEST(DegreeBound, InvalidArguments) {
  EXPECT_THROW(degree_bound(0, 2), DimensionError);
  EXPECT_THROW(degree_bound(2, 0), DimensionError);
}

TEST(HsCountBounds, Examples) {
  const auto a = hs_count_bounds(1, 1);
  EXPECT_EQ(a.hp_count, 4);
  ASSERT_TRUE(a.hf_count.has_value());
  EXPECT_EQ(*a.hf_count, 64);
  EXPECT_EQ(hs_count_bounds(1, 2).hp_count, 9);
}

TEST(HsCountBounds, ProductMatchesDirectEvaluation) {
  const auto b = hs_count_bounds(2, 1);  // D = 4, nD = 8
  Integer prod = binomial(10, 2);
  for (std::int64_t k = 0; k <= 8; ++k) prod *= 1 + (k + 1);
  EXPECT_EQ(b.hp_count, 45);
  EXPECT_EQ(*b.hf_count, prod);
}

TEST(HsCountBounds, CapEnforced) {
  EXPECT_THROW(hs_count_bounds(3, 2, false, 100), SizeCapError);
  const auto partial = hs_count_bounds(3, 2, true, 100);
  EXPECT_EQ(partial.hp_count, binomial(3 * 512 + 3, 3));
  EXPECT_FALSE(partial.hf_count.has_value());
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  for (std::int64_t n = 0; n <= 6; ++n) EXPECT_EQ(binomial(n, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(BinomialProperty, CountsMonomialsUpToDegree) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t d = 0; d <= 6; ++d) {
      std::vector<std::vector<std::int32_t>> all;
      std::vector<std::int32_t> cur;
      monomials_upto(n, d, cur, all);
      EXPECT_EQ(binomial(static_cast<std::int64_t>(n) + d, static_cast<std::int64_t>(n)), Integer(all.size()));
    }
}
