#pragma once

// Generator invariants of binary forms and their weight systems.
//
// For sextics the coordinates are the Igusa-Clebsch invariants (I2, I4, I6, I10),
// built from Clebsch's transvectant invariants A, B, C, D with Mestre's
// coefficients. These are the values printed as [J2 : J4 : J6 : J10] for genus 2
// moduli points in the weighted-height literature; on integer sextics they are
// integers and I10 equals the discriminant exactly. Every other degree exposes
// the discriminant alone, of weight 2d - 2.

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wmod/binary_form.hpp"

namespace wmod {

class WeightSystem {
 public:
  WeightSystem(std::vector<unsigned> weights, std::string label = "")
      : weights_(std::move(weights)), label_(std::move(label)) {
    if (weights_.empty()) throw domain_error("empty weight system");
    for (unsigned q : weights_)
      if (q == 0) throw domain_error("weights must be positive");
  }

  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return weights_.size(); }
  unsigned operator[](std::size_t i) const { return weights_.at(i); }

  unsigned gcd() const {
    unsigned g = 0;
    for (unsigned q : weights_) g = std::gcd(g, q);
    return g;
  }
  unsigned long lcm() const {
    unsigned long l = 1;
    for (unsigned q : weights_) l = std::lcm(l, static_cast<unsigned long>(q));
    return l;
  }
  bool has_odd_weight() const {
    for (unsigned q : weights_)
      if (q % 2 == 1) return true;
    return false;
  }

  /// Labels are informational; equality is on weights.
  bool operator==(const WeightSystem& o) const { return weights_ == o.weights_; }

 private:
  std::vector<unsigned> weights_;
  std::string label_;
};

namespace detail {

inline Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Coeffs partial(Coeffs c, unsigned x_times, unsigned y_times) {
  for (unsigned i = 0; i < x_times; ++i) c = d_dx(c);
  for (unsigned i = 0; i < y_times; ++i) c = d_dy(c);
  return c;
}

}  // namespace detail

/// k-th transvectant (f, g)_k of forms of degrees m and n (given as coefficient
/// lists), scaled by (m-k)!(n-k)!/(m!n!). The result has degree m + n - 2k.
inline detail::Coeffs transvectant(const detail::Coeffs& f, const detail::Coeffs& g, unsigned k) {
  const unsigned m = static_cast<unsigned>(f.size() - 1), n = static_cast<unsigned>(g.size() - 1);
  if (k > m || k > n) throw domain_error("transvectant order exceeds a form degree");
  detail::Coeffs acc(m + n - 2 * k + 1, Rational(0));
  for (unsigned i = 0; i <= k; ++i) {
    detail::Coeffs term =
        detail::multiply(detail::partial(f, k - i, i), detail::partial(g, i, k - i));
    Rational weight(detail::binomial(k, i));
    if (i % 2 == 1) weight = -weight;
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += weight * term[j];
  }
  const Rational scale =
      detail::factorial(m - k) * detail::factorial(n - k) / (detail::factorial(m) * detail::factorial(n));
  for (auto& v : acc) v *= scale;
  return acc;
}

/// Clebsch invariants A, B, C, D of a binary sextic.
struct ClebschInvariants {
  Rational a, b, c, d;
};

inline ClebschInvariants clebsch_invariants(const BinaryForm& f) {
  if (f.degree() != 6) throw domain_error("Clebsch invariants need a sextic, got degree " + std::to_string(f.degree()));
  const auto& s = f.coeffs();
  const auto i = transvectant(s, s, 4);
  const auto delta = transvectant(i, i, 2);
  const auto y1 = transvectant(s, i, 4);
  const auto y2 = transvectant(i, y1, 2);
  const auto y3 = transvectant(i, y2, 2);
  return {transvectant(s, s, 6)[0], transvectant(i, i, 4)[0], transvectant(i, delta, 4)[0],
          transvectant(y3, y1, 2)[0]};
}

/// Moduli coordinates of a sextic with weights (2, 4, 6, 10).
inline std::vector<Rational> igusa_point(const BinaryForm& f) {
  if (f.degree() != 6) throw domain_error("Igusa invariants need a sextic, got degree " + std::to_string(f.degree()));
  const auto [a, b, c, d] = clebsch_invariants(f);
  const Rational a2 = a * a, a3 = a2 * a;
  Rational i2 = -120 * a;
  Rational i4 = -720 * a2 + 6750 * b;
  Rational i6 = 8640 * a3 - 108000 * a * b + 202500 * c;
  Rational i10 = -62208 * a3 * a2 + 972000 * a3 * b + 1620000 * a2 * c - 3037500 * a * b * b - 6075000 * b * c -
                 4556250 * d;
  return {i2, i4, i6, i10};
}

inline WeightSystem igusa_weights() { return WeightSystem({2, 4, 6, 10}, "igusa"); }

/// Degree-d invariant generators together with their weights. evaluate(c*f)
/// scales coordinate i by c^weights[i].
struct InvariantSystem {
  unsigned degree;
  WeightSystem weights;
  std::function<std::vector<Rational>(const BinaryForm&)> evaluator;
  /// Display names of the coordinates, e.g. "J2".
  std::vector<std::string> names;

  std::vector<Rational> evaluate(const BinaryForm& f) const {
    if (f.degree() != degree)
      throw domain_error("invariant system for degree " + std::to_string(degree) + " applied to degree " +
                         std::to_string(f.degree()));
    return evaluator(f);
  }
};

inline InvariantSystem system_for(unsigned d) {
  if (d < 2) throw domain_error("invariant systems need degree >= 2, got " + std::to_string(d));
  if (d == 6) return {6, igusa_weights(), igusa_point, {"J2", "J4", "J6", "J10"}};
  return {d, WeightSystem({2 * d - 2}, "discriminant"),
          [](const BinaryForm& f) { return std::vector<Rational>{discriminant(f)}; },
          {"Delta"}};
}

}  // namespace wmod
