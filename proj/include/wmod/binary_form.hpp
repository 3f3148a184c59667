#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wmod/arith.hpp"

namespace wmod {

namespace detail {

// Coefficient lists in the BinaryForm convention: c[j] multiplies x^j y^(n-j).
using Coeffs = std::vector<Rational>;

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Coeffs d_dx(const Coeffs& c) {
  if (c.size() <= 1) return Coeffs{Rational(0)};
  Coeffs r(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) r[j - 1] = c[j] * static_cast<unsigned long>(j);
  return r;
}

inline Coeffs d_dy(const Coeffs& c) {
  if (c.size() <= 1) return Coeffs{Rational(0)};
  const std::size_t n = c.size() - 1;
  Coeffs r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = c[j] * static_cast<unsigned long>(n - j);
  return r;
}

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace detail

/// Homogeneous form sum_j a_j x^j y^(d-j), exact rational coefficients.
/// coeffs()[j] is a_j, so coeffs()[0] multiplies y^d and coeffs()[d] multiplies x^d.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw domain_error("binary form needs degree >= 1");
    bool nonzero = false;
    for (auto& c : coeffs_) {
      c.canonicalize();
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw domain_error("zero form");
  }

  static BinaryForm from_integers(const std::vector<Integer>& coeffs) {
    return BinaryForm(std::vector<Rational>(coeffs.begin(), coeffs.end()));
  }
  static BinaryForm from_integers(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return BinaryForm(std::move(c));
  }

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }

  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (!is_integer(c)) return false;
    return true;
  }

  std::vector<Integer> integer_coeffs() const {
    if (!is_integral()) throw domain_error("form has non-integral coefficients");
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_num());
    return out;
  }

  BinaryForm scaled(const Rational& s) const {
    if (s == 0) throw domain_error("scaling a form by zero");
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v *= s;
    return BinaryForm(std::move(c));
  }

  Rational evaluate(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j] * rpow(y, static_cast<long>(degree() - j));
    return acc;
  }

  /// "x^6 + 24*x^5*y - y^6". Accepted back by parse_form.
  std::string str() const {
    std::string out;
    const unsigned d = degree();
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      const unsigned xe = static_cast<unsigned>(k), ye = d - xe;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      auto var = [&](const char* v, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var("x", xe);
      var("y", ye);
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

  bool operator==(const BinaryForm& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Substitution (x, y) -> (a x + b y, c x + d y) followed by multiplication of
/// the form by `scalar`.
struct Gl2Transform {
  Rational a, b, c, d;
  Rational scalar;

  Gl2Transform(Rational a_, Rational b_, Rational c_, Rational d_, Rational scalar_ = 1)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), scalar(std::move(scalar_)) {
    if (determinant() == 0) throw domain_error("singular GL2 transform");
    if (scalar == 0) throw domain_error("GL2 transform with zero scalar");
  }

  static Gl2Transform identity() { return {1, 0, 0, 1, 1}; }
  static Gl2Transform diagonal(Rational x_scale, Rational y_scale, Rational scalar = 1) {
    return {std::move(x_scale), 0, 0, std::move(y_scale), std::move(scalar)};
  }

  Rational determinant() const { return a * d - b * c; }
};

/// M then N: transform(transform(f, m), n) == transform(f, compose(m, n)).
inline Gl2Transform compose(const Gl2Transform& m, const Gl2Transform& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d,
          m.scalar * n.scalar};
}

inline BinaryForm transform(const BinaryForm& f, const Gl2Transform& t) {
  using detail::Coeffs;
  const unsigned deg = f.degree();
  const Coeffs first{t.b, t.a};   // a x + b y
  const Coeffs second{t.d, t.c};  // c x + d y
  std::vector<Coeffs> first_pow{Coeffs{Rational(1)}}, second_pow{Coeffs{Rational(1)}};
  for (unsigned k = 1; k <= deg; ++k) {
    first_pow.push_back(detail::multiply(first_pow.back(), first));
    second_pow.push_back(detail::multiply(second_pow.back(), second));
  }
  Coeffs out(deg + 1, Rational(0));
  for (unsigned j = 0; j <= deg; ++j) {
    if (f[j] == 0) continue;
    Coeffs term = detail::multiply(first_pow[j], second_pow[deg - j]);
    for (unsigned k = 0; k <= deg; ++k) out[k] += f[j] * term[k];
  }
  for (auto& v : out) v *= t.scalar;
  return BinaryForm(std::move(out));
}

struct ContentDecomposition {
  Integer content;  // gcd of |a_j|, positive
  int unit;         // +1 or -1
  BinaryForm primitive;
};

/// f == unit * content * primitive, with the primitive's highest-index nonzero
/// coefficient positive.
inline ContentDecomposition content_and_primitive(const BinaryForm& f) {
  const std::vector<Integer> c = f.integer_coeffs();
  Integer g = 0;
  for (const auto& v : c) g = gcd(g, v);
  int unit = 1;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] != 0) {
      unit = c[j] < 0 ? -1 : 1;
      break;
    }
  }
  std::vector<Rational> prim;
  prim.reserve(c.size());
  for (const auto& v : c) prim.emplace_back(Integer(v / g) * unit);
  return {g, unit, BinaryForm(std::move(prim))};
}

/// Resultant of two binary forms via the Sylvester determinant. Degrees are
/// taken from the coefficient list lengths, so vanishing leading coefficients
/// correctly yield a common root at infinity.
inline Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> sylvester(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + k] = f[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + k] = g[n - k];
  return detail::determinant(std::move(sylvester));
}

/// Discriminant normalized as (-1)^(d(d-1)/2) Res(f_x, f_y) / d^(d-2): equals
/// b^2 - 4ac for quadratics and -4p^3 - 27q^2 for x^3 + p x y^2 + q y^3.
inline Rational discriminant(const BinaryForm& f) {
  const unsigned d = f.degree();
  if (d < 2) throw domain_error("discriminant needs degree >= 2");
  Rational res = resultant(detail::d_dx(f.coeffs()), detail::d_dy(f.coeffs()));
  const unsigned long half_pairs = static_cast<unsigned long>(d) * (d - 1) / 2;
  if (half_pairs % 2 == 1) res = -res;
  res /= Rational(ipow(Integer(d), d - 2));
  return res;
}

}  // namespace wmod
