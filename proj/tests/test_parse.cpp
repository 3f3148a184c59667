#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmod/parse.hpp"

using namespace wmod;

namespace {

BinaryForm form(const std::vector<long>& c) { return BinaryForm(std::vector<Rational>(c.begin(), c.end())); }

std::size_t error_offset(const std::string& text) {
  try {
    parse_form(text);
  } catch (const parse_error& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return std::string::npos;
}

}  // namespace

TEST(Parse, ReducedSextic) {
  const BinaryForm f =
      parse_form("x^6 + 24*x^5*y + 186*x^4*y^2 + 696*x^3*y^3 + 1397*x^2*y^4 + 1470*x*y^5 + 642*y^6");
  EXPECT_EQ(f, form(oracle::kSextic18));
}

TEST(Parse, SmallForms) {
  EXPECT_EQ(parse_form("x*y"), form({0, 1, 0}));
  EXPECT_EQ(parse_form("x*y").degree(), 2u);
  EXPECT_EQ(parse_form("  -x ^2\n + 3 * y^2 "), form({3, 0, -1}));
  EXPECT_EQ(parse_form("y*x*x"), form({0, 0, 1, 0}));
  EXPECT_EQ(parse_form("x^2 + x^2 - y^2"), form({-1, 0, 2}));
  EXPECT_EQ(parse_form("1/2*x + y"), BinaryForm({Rational(1), Rational(1, 2)}));
  EXPECT_EQ(parse_form("123456789012345678901234567890*x"),
            BinaryForm({Rational(0), Rational(Integer("123456789012345678901234567890"))}));
}

TEST(Parse, UnivariateIsHomogenized) {
  EXPECT_EQ(parse_form("x^3 - 2"), form({-2, 0, 0, 1}));
  EXPECT_EQ(parse_form("x^3 - 2", 5u), form({-2, 0, 0, 1, 0, 0}));
  EXPECT_THROW(parse_form("x^6 + 1", 5u), parse_error);
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset("x^"), 2u);
  EXPECT_EQ(error_offset("x + + y"), 4u);
  EXPECT_EQ(error_offset("x^2 + y"), 6u);  // mixed degree, points at the offending term
  EXPECT_THROW(parse_form(""), parse_error);
  EXPECT_THROW(parse_form("x - x"), parse_error);
  EXPECT_THROW(parse_form("z^2"), parse_error);
  EXPECT_THROW(parse_form("3"), parse_error);
  EXPECT_THROW(parse_form("x/y"), parse_error);
  try {
    parse_form("x^2 +\n  y^2 +\n  *");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Parse, RenderRoundTrip) {
  for (int round = 0; round < 500; ++round) {
    const unsigned d = oracle::uniform(1, 8);
    std::vector<Rational> c(d + 1);
    bool nonzero = false;
    for (auto& v : c) {
      v = oracle::uniform(0, 2) ? Rational(0) : make_rational(oracle::uniform(-99, 99), oracle::uniform(1, 3));
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) c[oracle::uniform(0, d)] = 1;
    const BinaryForm f(c);
    const std::string text = f.str();
    const bool has_y = text.find('y') != std::string::npos;
    const BinaryForm back = has_y ? parse_form(text) : parse_form(text, d);
    ASSERT_EQ(back, f) << text;
  }
}
