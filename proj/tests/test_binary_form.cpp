#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmod/binary_form.hpp"

using namespace wmod;
using oracle::Q;

namespace {

BinaryForm form(const std::vector<long>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return BinaryForm(std::move(v));
}

BinaryForm random_form(unsigned d, long range) {
  while (true) {
    std::vector<long> c(d + 1);
    bool nonzero = false;
    for (auto& v : c) {
      v = oracle::uniform(-range, range);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return form(c);
  }
}

Gl2Transform random_matrix(long range) {
  while (true) {
    const long a = oracle::uniform(-range, range), b = oracle::uniform(-range, range),
               c = oracle::uniform(-range, range), d = oracle::uniform(-range, range);
    if (a * d - b * c != 0) return {a, b, c, d};
  }
}

}  // namespace

TEST(BinaryForm, Construction) {
  const BinaryForm f = BinaryForm::from_integers({0, 1, 0});
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_TRUE(f.is_integral());
  EXPECT_FALSE(BinaryForm({Rational(1, 2), 1}).is_integral());
  EXPECT_THROW(BinaryForm::from_integers({0, 0, 0}), domain_error);
  EXPECT_THROW(BinaryForm::from_integers({5}), domain_error);
  EXPECT_THROW(BinaryForm({Rational(1, 2), 1}).integer_coeffs(), domain_error);
}

TEST(BinaryForm, Rendering) {
  EXPECT_EQ(form(oracle::kSextic18).str(),
            "x^6 + 24*x^5*y + 186*x^4*y^2 + 696*x^3*y^3 + 1397*x^2*y^4 + 1470*x*y^5 + 642*y^6");
  EXPECT_EQ(form({-1, 0, -3}).str(), "-3*x^2 - y^2");
  EXPECT_EQ(BinaryForm({Rational(1, 2), 0}).str(), "1/2*y");
}

TEST(Transform, Examples) {
  const BinaryForm f = form(oracle::kSextic1);
  EXPECT_EQ(transform(f, Gl2Transform::identity()), f);
  EXPECT_EQ(transform(form({0, 1, 0}), Gl2Transform::diagonal(2, 1)), form({0, 2, 0}));
  EXPECT_EQ(transform(f, Gl2Transform::diagonal(Rational(1, 6), 1, 6)), form(oracle::kSextic18));
}

TEST(Transform, MatchesPointwiseEvaluation) {
  for (int round = 0; round < 100; ++round) {
    const BinaryForm f = random_form(oracle::uniform(1, 6), 9);
    const Gl2Transform t = random_matrix(4);
    const BinaryForm g = transform(f, t);
    for (int k = 0; k < 3; ++k) {
      const Rational x = oracle::uniform(-5, 5), y = oracle::uniform(-5, 5);
      ASSERT_EQ(g.evaluate(x, y), f.evaluate(t.a * x + t.b * y, t.c * x + t.d * y));
    }
  }
}

TEST(Transform, GroupAction) {
  for (int round = 0; round < 100; ++round) {
    const BinaryForm f = random_form(oracle::uniform(1, 6), 9);
    Gl2Transform m = random_matrix(3), n = random_matrix(3);
    m.scalar = oracle::uniform(1, 4);
    n.scalar = Rational(1, oracle::uniform(1, 4));
    ASSERT_EQ(transform(transform(f, m), n), transform(f, compose(m, n)));
  }
}

TEST(Transform, RejectsSingular) {
  EXPECT_THROW(Gl2Transform(1, 2, 2, 4), domain_error);
  EXPECT_THROW(Gl2Transform::diagonal(1, 1, 0), domain_error);
}

TEST(Content, Examples) {
  const auto c1 = content_and_primitive(form(oracle::kSextic1));
  EXPECT_EQ(c1.content, 1);
  EXPECT_EQ(c1.primitive, form(oracle::kSextic1));

  // 6^6 f(x/6, y), expanded by hand from the coefficient list.
  std::vector<long> inflated;
  for (std::size_t j = 0; j < oracle::kSextic1.size(); ++j) {
    long p = 1;
    for (std::size_t k = j; k < 6; ++k) p *= 6;
    inflated.push_back(oracle::kSextic1[j] * p);
  }
  const auto c2 = content_and_primitive(form(inflated));
  EXPECT_EQ(c2.content, 7776);
  EXPECT_EQ(c2.primitive, form(oracle::kSextic18));

  EXPECT_EQ(content_and_primitive(form({4, 0, 2})).content, 2);
  const auto neg = content_and_primitive(form({3, 0, -6}));
  EXPECT_EQ(neg.content, 3);
  EXPECT_EQ(neg.unit, -1);
  EXPECT_EQ(neg.primitive, form({-1, 0, 2}));
  EXPECT_THROW(content_and_primitive(BinaryForm({Rational(1, 2), 1})), domain_error);
}

TEST(Discriminant, Examples) {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        EXPECT_EQ(discriminant(form({c, b, a})), Rational(b * b - 4 * a * c));
      }
  EXPECT_EQ(discriminant(form({0, -1, 0, 1})), 4);  // x^3 - x y^2
  EXPECT_EQ(discriminant(form({0, 0, 0, 0, 1, 0, 0})), 0);  // x^4 y^2
  EXPECT_EQ(discriminant(form({0, 0, 0, 0, 0, 0, 1})), 0);
  EXPECT_THROW(discriminant(form({1, 1})), domain_error);
}

TEST(Discriminant, DepressedCubic) {
  for (long p = -6; p <= 6; ++p)
    for (long q = -6; q <= 6; ++q) EXPECT_EQ(discriminant(form({q, p, 0, 1})), Rational(-4 * p * p * p - 27 * q * q));
}

TEST(Discriminant, RootProduct) {
  // a^(2d-2) prod (r_i - r_j)^2 for forms built from distinct rational roots.
  for (int round = 0; round < 150; ++round) {
    const unsigned d = oracle::uniform(2, 6);
    const Q a = oracle::frac(oracle::uniform(1, 5) * (round % 2 ? 1 : -1), oracle::uniform(1, 3));
    std::vector<Q> roots;
    while (roots.size() < d) {
      const Q r = oracle::frac(oracle::uniform(-7, 7), oracle::uniform(1, 4));
      roots.push_back(r);
    }
    Q want = oracle::qpow(a, 2 * d - 2);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = i + 1; j < d; ++j) want *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    ASSERT_EQ(discriminant(BinaryForm(oracle::form_from_roots(a, roots))), want);
  }
}

TEST(Discriminant, DeterminantPowerScaling) {
  int cases = 0;
  for (int round = 0; round < 240; ++round) {
    const unsigned d = oracle::uniform(2, 6);
    const BinaryForm f = random_form(d, 20);
    const Gl2Transform m = random_matrix(5);
    const Rational det = m.determinant();
    ASSERT_EQ(discriminant(transform(f, m)), rpow(det, d * (d - 1)) * discriminant(f));
    ++cases;
  }
  EXPECT_GE(cases, 200);
}

TEST(Discriminant, ScalarHomogeneity) {
  for (int round = 0; round < 100; ++round) {
    const unsigned d = oracle::uniform(2, 6);
    const BinaryForm f = random_form(d, 20);
    const Rational c = make_rational(oracle::uniform(1, 9) * (round % 2 ? 1 : -1), oracle::uniform(1, 9));
    ASSERT_EQ(discriminant(f.scaled(c)), rpow(c, 2 * d - 2) * discriminant(f));
  }
}

TEST(Discriminant, IntegralOnIntegralForms) {
  for (int round = 0; round < 200; ++round) {
    const BinaryForm f = random_form(oracle::uniform(2, 7), 50);
    ASSERT_TRUE(is_integer(discriminant(f))) << f.str();
  }
}

TEST(Discriminant, ZeroExactlyOnRepeatedRootsCubicSweep) {
  std::size_t zeros = 0;
  for (long a0 = -3; a0 <= 3; ++a0)
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long a3 = -3; a3 <= 3; ++a3) {
          if (!a0 && !a1 && !a2 && !a3) continue;
          const std::vector<Q> c{a0, a1, a2, a3};
          const bool repeated = oracle::has_repeated_root(c);
          ASSERT_EQ(discriminant(form({a0, a1, a2, a3})) == 0, repeated) << a0 << " " << a1 << " " << a2 << " " << a3;
          zeros += repeated;
        }
  EXPECT_GT(zeros, 0u);
}

TEST(Resultant, CommonRootAndInfinity) {
  // (x - y)(x + 2y) and (x - y)(x - 3y) share x = y.
  EXPECT_EQ(resultant({-2, 1, 1}, {3, -4, 1}), 0);
  // y and y share the root at infinity.
  EXPECT_EQ(resultant({1, 0}, {1, 0}), 0);
  EXPECT_EQ(abs(resultant({1, 0}, {0, 1})), 1);
}
