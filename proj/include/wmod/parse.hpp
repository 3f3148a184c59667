#pragma once

// Reader for binary forms written as sums of monomials:
//
//   expr    := [sign] term { sign term }
//   term    := factor { '*' factor }
//   factor  := integer [ '/' integer ] | ('x' | 'y') [ '^' integer ]
//
// Whitespace (including newlines) is ignored between tokens. Input without y
// is homogenized to the declared degree, or to its x-degree when none is given.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmod/binary_form.hpp"

namespace wmod {

namespace detail {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  struct Term {
    Rational coeff = 1;
    unsigned x = 0, y = 0;
    std::size_t offset = 0;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      take();
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw parse_error(what, offset, line, column);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(at_end() ? "expected a number, found end of input" : "expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    const std::size_t start = pos_;
    Integer e = integer();
    if (!e.fits_uint_p() || e > 10000) fail_at("exponent too large", start);
    return static_cast<unsigned>(e.get_ui());
  }

  Term term(bool negative) {
    skip_ws();
    Term t;
    t.offset = pos_;
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      factor(t);
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end()) fail("expected a factor, found end of input");
    const char c = peek();
    if (c == 'x' || c == 'y') {
      take();
      unsigned e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        take();
        e = exponent();
      }
      (c == 'x' ? t.x : t.y) += e;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v(integer());
      skip_ws();
      if (!at_end() && peek() == '/') {
        take();
        const std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) fail_at("division by zero", at);
        v /= Rational(den);
      }
      t.coeff *= v;
      return;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BinaryForm parse_form(std::string_view text, std::optional<unsigned> degree = std::nullopt) {
  detail::FormParser parser(text);
  const auto terms = parser.parse();

  bool has_y = false;
  unsigned max_total = 0, max_x = 0;
  for (const auto& t : terms) {
    has_y = has_y || t.y > 0;
    max_total = std::max(max_total, t.x + t.y);
    max_x = std::max(max_x, t.x);
  }
  const unsigned d = degree ? *degree : (has_y ? max_total : max_x);
  if (d == 0) parser.fail_at("form has degree 0", 0);

  std::map<unsigned, Rational> by_x;
  for (const auto& t : terms) {
    if (has_y || degree) {
      if (has_y && t.x + t.y != d)
        parser.fail_at("mixed-degree term of degree " + std::to_string(t.x + t.y) + " in a form of degree " +
                           std::to_string(d),
                       t.offset);
      if (!has_y && t.x > d)
        parser.fail_at("term of x-degree " + std::to_string(t.x) + " exceeds declared degree " + std::to_string(d),
                       t.offset);
    }
    by_x[t.x] += t.coeff;
  }
  std::vector<Rational> coeffs(d + 1, Rational(0));
  bool nonzero = false;
  for (auto& [x, c] : by_x) {
    c.canonicalize();
    coeffs[x] = c;
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) parser.fail_at("zero form", 0);
  return BinaryForm(std::move(coeffs));
}

}  // namespace wmod
