#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmod/invariants.hpp"

using namespace wmod;
using oracle::Q;

namespace {

BinaryForm form(const std::vector<long>& c) { return BinaryForm(std::vector<Rational>(c.begin(), c.end())); }

BinaryForm random_sextic(long range) {
  while (true) {
    std::vector<long> c(7);
    for (auto& v : c) v = oracle::uniform(-range, range);
    c[6] = oracle::uniform(1, range);
    const BinaryForm f = form(c);
    if (discriminant(f) != 0) return f;
  }
}

}  // namespace

TEST(Igusa, FirstSexticExact) {
  EXPECT_EQ(igusa_point(form(oracle::kSextic1)), oracle::to_q(oracle::point1()));
}

TEST(Igusa, ReducedSexticExact) {
  EXPECT_EQ(igusa_point(form(oracle::kSextic18)), oracle::to_q(oracle::point2()));
}

TEST(Igusa, RepeatedRootKillsTheLastCoordinate) {
  // x^2 (x - y) y^3 = x^3 y^3 - x^2 y^4
  const auto p = igusa_point(form({0, 0, -1, 1, 0, 0, 0}));
  EXPECT_EQ(p[3], 0);
  EXPECT_EQ(igusa_point(form({0, 0, 0, 0, 0, 0, 1}))[3], 0);
}

TEST(Igusa, WrongDegree) {
  EXPECT_THROW(igusa_point(form({1, 0, 0, 0, 0, 1})), domain_error);
  EXPECT_THROW(clebsch_invariants(form({1, 0, 1})), domain_error);
}

TEST(Igusa, AgreesWithRootSums) {
  for (int round = 0; round < 60; ++round) {
    const Q a = oracle::frac(oracle::uniform(1, 4) * (round % 3 ? 1 : -1), oracle::uniform(1, 2));
    std::vector<Q> roots;
    for (int k = 0; k < 6; ++k) roots.push_back(oracle::frac(oracle::uniform(-6, 6), oracle::uniform(1, 3)));
    const auto want = oracle::igusa_from_roots(a, roots);
    const auto got = igusa_point(BinaryForm(oracle::form_from_roots(a, roots)));
    for (int i = 0; i < 4; ++i) ASSERT_EQ(got[i], want[i]) << "coordinate " << i << " round " << round;
  }
}

TEST(Igusa, ScalingLaw) {
  const std::vector<unsigned> q{2, 4, 6, 10};
  int cases = 0;
  for (int round = 0; round < 200; ++round) {
    const BinaryForm f = random_sextic(12);
    long a, b, c, d;
    do {
      a = oracle::uniform(-3, 3), b = oracle::uniform(-3, 3), c = oracle::uniform(-3, 3), d = oracle::uniform(-3, 3);
    } while (a * d - b * c == 0);
    const Rational scalar = make_rational(oracle::uniform(1, 5) * (round % 2 ? 1 : -1), oracle::uniform(1, 5));
    const Gl2Transform m(a, b, c, d, scalar);
    const Rational lambda = scalar * rpow(m.determinant(), 3);
    const auto before = igusa_point(f), after = igusa_point(transform(f, m));
    for (int i = 0; i < 4; ++i) ASSERT_EQ(after[i], rpow(lambda, q[i]) * before[i]);
    ++cases;
  }
  EXPECT_GE(cases, 200);
}

TEST(Igusa, IntegralOnIntegralSextics) {
  for (int round = 0; round < 200; ++round) {
    std::vector<long> c(7);
    for (auto& v : c) v = oracle::uniform(-40, 40);
    c[6] = oracle::uniform(1, 40);
    for (const auto& v : igusa_point(form(c))) ASSERT_TRUE(is_integer(v));
  }
}

TEST(Igusa, LastCoordinateIsTheDiscriminant) {
  // Fit the constant on two forms, then check it everywhere.
  const BinaryForm f1 = form(oracle::kSextic1), f2 = form({1, 0, 0, 0, 0, 0, 1});
  const Rational k1 = igusa_point(f1)[3] / discriminant(f1), k2 = igusa_point(f2)[3] / discriminant(f2);
  ASSERT_EQ(k1, k2);
  for (int round = 0; round < 200; ++round) {
    std::vector<long> c(7);
    for (auto& v : c) v = oracle::uniform(-9, 9);
    c[6] = oracle::uniform(1, 9);
    const BinaryForm f = form(c);
    ASSERT_EQ(igusa_point(f)[3], k1 * discriminant(f));
  }
  EXPECT_EQ(k1, 1);
}

TEST(Igusa, UnimodularSubstitutionFixesThePoint) {
  for (int round = 0; round < 50; ++round) {
    const BinaryForm f = random_sextic(9);
    // Products of elementary matrices have determinant 1.
    const long s = oracle::uniform(-3, 3), t = oracle::uniform(-3, 3);
    const Gl2Transform m = compose(Gl2Transform(1, s, 0, 1), Gl2Transform(1, 0, t, 1));
    ASSERT_EQ(igusa_point(transform(f, m)), igusa_point(f));
  }
}

TEST(Transvectant, ClassicalSmallCases) {
  // (f, f)_2 of a quadratic a x^2 + b x y + c y^2 is 2ac - b^2/2.
  const detail::Coeffs q{Rational(3), Rational(5), Rational(7)};
  EXPECT_EQ(transvectant(q, q, 2)[0], Rational(2 * 3 * 7) - Rational(25, 2));
  // (f, g)_0 is the product.
  const detail::Coeffs lin{Rational(1), Rational(2)};
  EXPECT_EQ(transvectant(lin, lin, 0), (detail::Coeffs{1, 4, 4}));
}

TEST(SystemFor, Dispatch) {
  EXPECT_EQ(system_for(6).weights.weights(), (std::vector<unsigned>{2, 4, 6, 10}));
  EXPECT_EQ(system_for(5).weights.weights(), (std::vector<unsigned>{8}));
  EXPECT_EQ(system_for(3).weights.weights(), (std::vector<unsigned>{4}));
  EXPECT_THROW(system_for(1), domain_error);
  EXPECT_THROW(system_for(0), domain_error);
  const BinaryForm quintic = form({1, 0, 0, 0, 1, 1});
  EXPECT_EQ(system_for(5).evaluate(quintic), std::vector<Rational>{discriminant(quintic)});
  EXPECT_THROW(system_for(5).evaluate(form(oracle::kSextic1)), domain_error);
}

TEST(SystemFor, Homogeneity) {
  for (unsigned d = 2; d <= 8; ++d) {
    const auto sys = system_for(d);
    std::vector<long> c(d + 1);
    for (auto& v : c) v = oracle::uniform(-5, 5);
    c[d] = 1;
    const BinaryForm f = form(c);
    const Rational k(-3, 2);
    const auto before = sys.evaluate(f), after = sys.evaluate(f.scaled(k));
    ASSERT_EQ(before.size(), sys.weights.size());
    for (std::size_t i = 0; i < before.size(); ++i) ASSERT_EQ(after[i], rpow(k, sys.weights[i]) * before[i]);
  }
}

TEST(WeightSystem, Basics) {
  const WeightSystem w({6, 12, 18, 30});
  EXPECT_EQ(w.gcd(), 6u);
  EXPECT_EQ(w.lcm(), 180u);
  EXPECT_FALSE(w.has_odd_weight());
  EXPECT_TRUE(WeightSystem({1, 2}).has_odd_weight());
  EXPECT_THROW(WeightSystem({}), domain_error);
  EXPECT_THROW(WeightSystem({2, 0}), domain_error);
}
