#pragma once

// Minimal models and minimal twists of superelliptic curves
//
//     c * z^m * y^(d-m) = f(x, y)
//
// by reduction of the weighted moduli point. One engine serves three modes; each
// removes, prime by prime, the largest multiple of a step s from the star scalar:
//
//   model      s = d/2            x -> x/lambda, k-isomorphic up to z scaling
//   normalize  s = 1              the wgcd normalization of the point
//   twist      s = 1/gcd(q_i)     the absolute wgcd; lambda may be irrational
//
// The moduli point of a curve is (1/c) * I(f). Realized equations carry the
// twist scalar that makes their recomputed point equal the reported one.

#include <optional>
#include <string>
#include <utility>

#include "wmod/binary_form.hpp"
#include "wmod/invariants.hpp"
#include "wmod/weighted.hpp"

namespace wmod {

class SuperellipticCurve {
 public:
  SuperellipticCurve(unsigned m, BinaryForm form, Integer twist_scalar = 1)
      : m_(m), form_(std::move(form)), twist_(std::move(twist_scalar)) {
    if (m_ < 2) throw domain_error("superelliptic exponent m must be >= 2");
    if (!form_.is_integral()) throw domain_error("curve equation must have integral coefficients");
    if (form_.degree() < 3) throw domain_error("curve form must have degree >= 3");
    if (twist_ == 0) throw domain_error("twist scalar must be nonzero");
    if (discriminant(form_) == 0) throw domain_error("inseparable form (discriminant is zero)");
  }

  unsigned m() const noexcept { return m_; }
  unsigned degree() const noexcept { return form_.degree(); }
  const BinaryForm& form() const noexcept { return form_; }
  const Integer& twist_scalar() const noexcept { return twist_; }
  /// Degrees 3 and 4 are accepted for comparison with the elliptic path only.
  bool low_degree() const noexcept { return degree() < 5; }

  InvariantSystem invariant_system() const { return system_for(degree()); }

  WeightedPoint moduli_point() const {
    const InvariantSystem sys = invariant_system();
    return star(Rational(1) / twist_, WeightedPoint(sys.evaluate(form_), sys.weights));
  }

  /// "2*z^2*y^4 = x^6 + ..." with the z/y factor elided when d = m.
  std::string str() const {
    std::string lhs = twist_ == 1 ? "" : (twist_ == -1 ? "-" : twist_.get_str() + "*");
    lhs += "z";
    if (m_ > 1) lhs += "^" + std::to_string(m_);
    const unsigned ye = degree() > m_ ? degree() - m_ : 0;
    if (ye) lhs += "*y" + (ye > 1 ? "^" + std::to_string(ye) : std::string());
    return lhs + " = " + form_.str();
  }

  bool operator==(const SuperellipticCurve& o) const {
    return m_ == o.m_ && form_ == o.form_ && twist_ == o.twist_;
  }

 private:
  unsigned m_;
  BinaryForm form_;
  Integer twist_;
};

enum class ReductionMode { model, normalize, twist };

inline std::string to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::model: return "model";
    case ReductionMode::normalize: return "normalize";
    case ReductionMode::twist: return "twist";
  }
  return "?";
}

struct ReductionReport {
  ReductionMode mode;
  WeightedPoint input_point;
  WeightedPoint output_point;
  /// output_point == star_inverse(star_scalar, input_point).
  PrimeExponentMap star_scalar;
  /// Substitution scalar, x -> x/lambda; lambda^(d/2) == star_scalar.
  PrimeExponentMap lambda;
  /// The rational x -> x/s actually applied to build realized_equation. Equal
  /// to lambda in model mode; in the twist modes the smallest integer s with
  /// lambda | s, the leftover going into the twist scalar.
  Rational substitution = 1;
  std::optional<SuperellipticCurve> realized_equation;
  /// False when a realization was attempted and rejected (irrational scalar or
  /// point mismatch); the report is then point-only.
  bool realized = true;
  bool defined_over_base = true;
  std::optional<std::string> extension_note;
};

/// min_i q_i * v_prime(x_i), the largest j with prime^j | x_i^(q_i) for all i.
inline std::int64_t weighted_tuple_valuation(const WeightedPoint& p, const Integer& prime) {
  p.integer_coords();
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Valuation v = valuation(p[i], prime);
    if (v.is_infinite()) continue;
    const std::int64_t w = v.value() * static_cast<std::int64_t>(p.weight(i));
    if (!best || w < *best) best = w;
  }
  return *best;
}

inline Rational step_for(ReductionMode mode, unsigned degree, const WeightSystem& weights) {
  switch (mode) {
    case ReductionMode::model: return make_rational(degree, 2);
    case ReductionMode::normalize: return Rational(1);
    case ReductionMode::twist: return make_rational(1, weights.gcd());
  }
  return Rational(1);
}

/// Per prime, the largest multiple e of `step` with e * q_i <= v_prime(x_i) for
/// all i. Every step * q_i must be an integer so that the reduced point stays
/// rational.
inline PrimeExponentMap reduction_exponents(const WeightedPoint& p, const Rational& step) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_integer(step * p.weight(i)))
      throw domain_error("step " + step.get_str() + " times weight " + std::to_string(p.weight(i)) +
                         " is not an integer");
  }
  return step_exponents(p, step);
}

inline bool is_minimal(const SuperellipticCurve& curve) {
  return reduction_exponents(curve.moduli_point(), make_rational(curve.degree(), 2)).empty();
}

namespace detail {

struct Realization {
  std::optional<SuperellipticCurve> curve;
  bool defined_over_base = true;
  std::optional<std::string> extension_note;
};

// Integer part/denominators cleared: returns s with s * values all integral and
// gcd 1 across them.
inline Rational primitive_scale(const std::vector<Rational>& values) {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& v : values) {
    num_gcd = gcd(num_gcd, v.get_num());
    den_lcm = lcm(den_lcm, v.get_den());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

inline std::string extension_field(const PrimeExponentMap& generator) {
  return "Q(" + generator.str() + ")";
}

// Realizes the substitution x -> x/subst on `curve`, optionally dividing out
// the content, and picks the twist scalar that lands on `target`.
inline Realization realize(const SuperellipticCurve& curve, const Rational& subst, const PrimeExponentMap& star_scalar,
                           bool divide_content, const WeightedPoint& target) {
  const unsigned d = curve.degree(), m = curve.m();
  const Rational subst_pow_d = rpow(subst, d);
  BinaryForm g = transform(curve.form(), Gl2Transform::diagonal(1 / subst, 1, subst_pow_d));
  Rational kappa = 1;
  if (divide_content) {
    kappa = 1 / primitive_scale(g.coeffs());
  } else if (!g.is_integral()) {
    // Negative exponents (twisted, non-integral points): clear denominators only.
    Integer den = 1;
    for (const auto& v : g.coeffs()) den = lcm(den, v.get_den());
    kappa = Rational(1) / den;
  }
  g = g.scaled(1 / kappa);

  // Twist scalar c' = c * star * subst^(d/2) / kappa, via exponents.
  std::map<Integer, Rational> exps =
      PrimeExponentMap::of(Rational(curve.twist_scalar()) * subst_pow_d / kappa).exponents();
  const PrimeExponentMap subst_exps = PrimeExponentMap::of(subst);
  for (const auto& [p, e] : subst_exps.exponents()) exps[p] -= e * make_rational(d, 2);
  for (const auto& [p, e] : star_scalar.exponents()) exps[p] += e;

  Realization out;
  // The base-field question: is c * z^m * y^(d-m) = g isomorphic to the input
  // over Q, i.e. is subst^d / kappa an m-th power?
  const PrimeExponentMap root = PrimeExponentMap::of(subst_pow_d / kappa).scaled(make_rational(1, m));
  out.defined_over_base = root.is_rational();
  if (!out.defined_over_base) out.extension_note = "isomorphism defined over " + extension_field(root);

  Rational c_prime = curve.twist_scalar() < 0 ? -1 : 1;
  for (const auto& [p, e] : exps) {
    if (e == 0) continue;
    if (!is_integer(e)) return out;
    c_prime *= rpow(Rational(p), e.get_num().get_si());
  }
  // Rational scalar a/b: a z^m = b g.
  if (c_prime.get_den() != 1) g = g.scaled(Rational(c_prime.get_den()));
  SuperellipticCurve realized(m, g, c_prime.get_num());
  if (realized.moduli_point() != target) return out;
  out.curve = std::move(realized);
  return out;
}

inline ReductionReport reduce(const SuperellipticCurve& curve, ReductionMode mode) {
  const unsigned d = curve.degree();
  const WeightedPoint input = curve.moduli_point();
  const PrimeExponentMap star_scalar = reduction_exponents(input, step_for(mode, d, input.weights()));
  const WeightedPoint output = star_inverse(star_scalar, input);
  const PrimeExponentMap lambda = star_scalar.scaled(make_rational(2, d));

  ReductionReport report{mode, input, output, star_scalar, lambda, 1, std::nullopt, true, true, std::nullopt};
  if (mode == ReductionMode::model) {
    report.substitution = lambda.value();
    Realization r = realize(curve, report.substitution, star_scalar, false, output);
    report.realized = r.curve.has_value();
    report.realized_equation = std::move(r.curve);
    report.defined_over_base = r.defined_over_base;
    report.extension_note = std::move(r.extension_note);
    return report;
  }

  // Smallest rational substitution dominating lambda, then content removal.
  Rational subst = 1;
  for (const auto& [p, e] : lambda.exponents()) subst *= rpow(Rational(p), ceil(e).get_si());
  report.substitution = subst;
  Realization r = realize(curve, subst, star_scalar, true, output);
  report.realized = r.curve.has_value();
  report.realized_equation = std::move(r.curve);
  if (!report.realized) {
    report.defined_over_base = false;
    report.extension_note = lambda.is_rational()
                                ? "no twist scalar over Q realizes the reduced point"
                                : "lambda = " + lambda.str() + " generates " + extension_field(lambda);
  } else {
    report.defined_over_base = r.defined_over_base;
    report.extension_note = std::move(r.extension_note);
  }
  return report;
}

}  // namespace detail

/// Step d/2 reduction. The realized equation is lambda^d f(x/lambda, y) with
/// twist scalar c * lambda^d; it is isomorphic to c z^m y^(d-m) = same form over
/// Q(lambda^(d/m)).
inline ReductionReport minimal_model(const SuperellipticCurve& curve) {
  return detail::reduce(curve, ReductionMode::model);
}

/// integral_only: the wgcd normalization of the point (step 1). Otherwise the
/// absolute reduction (step 1/gcd(q_i)), whose lambda may be irrational.
inline ReductionReport minimal_twist(const SuperellipticCurve& curve, bool integral_only) {
  return detail::reduce(curve, integral_only ? ReductionMode::normalize : ReductionMode::twist);
}

/// The twist c * z^m y^(d-m) = f of a curve by a nonzero rational c. A
/// denominator b is moved onto the form, and any factor common to the new twist
/// scalar and the form's content is cancelled.
inline SuperellipticCurve scalar_twist(const SuperellipticCurve& curve, const Rational& c) {
  if (c == 0) throw domain_error("twist by zero");
  Integer scalar = curve.twist_scalar() * c.get_num();
  BinaryForm form = curve.form().scaled(Rational(c.get_den()));
  const Integer common = gcd(scalar, content_and_primitive(form).content);
  if (common != 1) {
    scalar /= common;
    form = form.scaled(Rational(1) / common);
  }
  return SuperellipticCurve(curve.m(), std::move(form), std::move(scalar));
}

struct DiscriminantReduction {
  SuperellipticCurve curve;
  /// The scale actually applied: the reduced discriminant is Delta / u^(m d (d-1)).
  Integer u;
  /// prod p^floor(v_p(Delta) / (m d (d-1))), the largest admissible scale.
  Integer bound;
};

/// x -> x / u^m on the form. Per prime the exponent starts at the bound and is
/// lowered until the substituted form is integral, so u == bound whenever the
/// bound is realizable by an integral model.
inline DiscriminantReduction minimize_discriminant(const SuperellipticCurve& curve) {
  const BinaryForm& f = curve.form();
  const Rational delta = discriminant(f);
  if (delta == 0) throw domain_error("inseparable");
  const unsigned d = f.degree(), m = curve.m();
  const unsigned long threshold = static_cast<unsigned long>(m) * d * (d - 1);

  Integer bound = 1, u = 1;
  for (const auto& [p, alpha] : factorize(delta.get_num()).factors) {
    const unsigned long top = alpha / threshold;
    if (top == 0) continue;
    bound *= ipow(p, top);
    // f(x / p^(m k), y) is integral iff p^(m k j) | a_j for every j.
    unsigned long k = top;
    for (; k > 0; --k) {
      bool integral = true;
      for (unsigned j = 1; j <= d && integral; ++j) {
        const Valuation v = valuation(f[j].get_num(), p);
        integral = v.is_infinite() || v.value() >= static_cast<std::int64_t>(m * k * j);
      }
      if (integral) break;
    }
    u *= ipow(p, k);
  }
  if (u == 1) return {curve, u, bound};
  const Rational shrink = 1 / Rational(ipow(u, m));
  BinaryForm reduced = transform(f, Gl2Transform::diagonal(shrink, 1));
  return {SuperellipticCurve(m, std::move(reduced), curve.twist_scalar()), u, bound};
}

}  // namespace wmod
