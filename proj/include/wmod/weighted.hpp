#pragma once

// Points of weighted projective space over Q: the star action, weighted gcds,
// normalization and the weighted height.

#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wmod/arith.hpp"
#include "wmod/invariants.hpp"

namespace wmod {

class WeightedPoint {
 public:
  WeightedPoint(std::vector<Rational> coords, WeightSystem weights)
      : coords_(std::move(coords)), weights_(std::move(weights)) {
    if (coords_.size() != weights_.size())
      throw domain_error("point has " + std::to_string(coords_.size()) + " coordinates but " +
                         std::to_string(weights_.size()) + " weights");
    bool nonzero = false;
    for (auto& c : coords_) {
      c.canonicalize();
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw domain_error("weighted point with all coordinates zero");
  }

  static WeightedPoint from_integers(const std::vector<Integer>& coords, WeightSystem weights) {
    return WeightedPoint(std::vector<Rational>(coords.begin(), coords.end()), std::move(weights));
  }

  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  unsigned weight(std::size_t i) const { return weights_[i]; }

  bool is_integral() const {
    for (const auto& c : coords_)
      if (!is_integer(c)) return false;
    return true;
  }

  std::vector<Integer> integer_coords() const {
    if (!is_integral()) throw domain_error("weighted point has non-integral coordinates");
    std::vector<Integer> out;
    for (const auto& c : coords_) out.push_back(c.get_num());
    return out;
  }

  /// "[6144 : -1129584 : 455140848 : 38417279600832]"
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += " : ";
      out += coords_[i].get_str();
    }
    return out + "]";
  }

  /// Equality of coordinate tuples, not of projective classes.
  bool operator==(const WeightedPoint& o) const { return weights_ == o.weights_ && coords_ == o.coords_; }

 private:
  std::vector<Rational> coords_;
  WeightSystem weights_;
};

/// The real number prod p^(e_p) with rational exponents, all multiples of
/// 1/denominator_bound. Exponents are nonzero; a negative exponent appears only
/// when a reduction has to enlarge a non-integral point.
class PrimeExponentMap {
 public:
  explicit PrimeExponentMap(unsigned denominator_bound = 1) : bound_(denominator_bound) {
    if (bound_ == 0) throw domain_error("denominator bound must be positive");
  }

  PrimeExponentMap(std::map<Integer, Rational> exponents, unsigned denominator_bound)
      : PrimeExponentMap(denominator_bound) {
    for (auto& [p, e] : exponents) set(p, e);
  }

  /// Exponent map of a nonzero rational's absolute value.
  static PrimeExponentMap of(const Rational& value) {
    if (value == 0) throw domain_error("zero has no exponent map");
    PrimeExponentMap out;
    for (const auto& [p, e] : factorize(value.get_num()).factors) out.set(p, Rational(static_cast<long>(e)));
    for (const auto& [p, e] : factorize(value.get_den()).factors) out.set(p, -Rational(static_cast<long>(e)));
    return out;
  }

  void set(const Integer& p, Rational e) {
    e.canonicalize();
    if (e == 0) {
      exponents_.erase(p);
      return;
    }
    if (!is_integer(e * bound_))
      throw domain_error("exponent " + e.get_str() + " of " + p.get_str() + " is not a multiple of 1/" +
                         std::to_string(bound_));
    exponents_[p] = std::move(e);
  }

  Rational exponent(const Integer& p) const {
    auto it = exponents_.find(p);
    return it == exponents_.end() ? Rational(0) : it->second;
  }

  const std::map<Integer, Rational>& exponents() const noexcept { return exponents_; }
  unsigned denominator_bound() const noexcept { return bound_; }
  bool empty() const noexcept { return exponents_.empty(); }
  bool is_rational() const {
    for (const auto& [p, e] : exponents_)
      if (!is_integer(e)) return false;
    return true;
  }

  Rational value() const {
    if (!is_rational()) throw domain_error("exponent map " + str() + " is not a rational number");
    Rational out = 1;
    for (const auto& [p, e] : exponents_) out *= rpow(Rational(p), e.get_num().get_si());
    return out;
  }

  /// Every exponent multiplied by `factor`; the bound becomes the lcm of the
  /// resulting denominators.
  PrimeExponentMap scaled(const Rational& factor) const {
    Integer bound = 1;
    std::map<Integer, Rational> out;
    for (const auto& [p, e] : exponents_) {
      Rational v = e * factor;
      v.canonicalize();
      bound = lcm(bound, v.get_den());
      out.emplace(p, v);
    }
    return PrimeExponentMap(std::move(out), static_cast<unsigned>(bound.get_ui()));
  }

  /// "2^(5/2)*3^2", "1" when empty.
  std::string str() const {
    if (exponents_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : exponents_) {
      if (!out.empty()) out += "*";
      out += p.get_str();
      if (e == 1) continue;
      out += is_integer(e) && e > 0 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
    }
    return out;
  }

  /// Compares the represented real numbers.
  bool operator==(const PrimeExponentMap& o) const { return exponents_ == o.exponents_; }

 private:
  std::map<Integer, Rational> exponents_;
  unsigned bound_;
};

inline WeightedPoint star(const Rational& lambda, const WeightedPoint& p) {
  if (lambda == 0) throw domain_error("star action by zero");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(rpow(lambda, p.weight(i)) * p[i]);
  return WeightedPoint(std::move(out), p.weights());
}

namespace detail {

inline WeightedPoint star_exponents(const PrimeExponentMap& lambda, const WeightedPoint& p, int direction) {
  std::vector<Rational> out = p.coords();
  for (const auto& [prime, e] : lambda.exponents()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rational power = e * p.weight(i);
      if (!is_integer(power))
        throw domain_error("star by " + lambda.str() + " is irrational at prime " + prime.get_str() +
                           ", coordinate " + std::to_string(i));
      out[i] *= rpow(Rational(prime), direction * power.get_num().get_si());
    }
  }
  return WeightedPoint(std::move(out), p.weights());
}

}  // namespace detail

/// lambda * p for lambda = prod prime^e; every e * q_i must be an integer.
inline WeightedPoint star(const PrimeExponentMap& lambda, const WeightedPoint& p) {
  return detail::star_exponents(lambda, p, 1);
}

/// (1/lambda) * p.
inline WeightedPoint star_inverse(const PrimeExponentMap& lambda, const WeightedPoint& p) {
  return detail::star_exponents(lambda, p, -1);
}

/// Largest multiple e of `step` with e * q_i <= v_prime(x_i) for every nonzero
/// coordinate, computed for each prime where it is nonzero. Works on rational
/// points (exponents at denominator primes come out negative). Zero
/// coordinates have infinite valuation and never constrain.
inline PrimeExponentMap step_exponents(const WeightedPoint& p, const Rational& step) {
  if (step <= 0) throw domain_error("reduction step must be positive");
  std::set<Integer> primes;
  Integer numerator_gcd = 0;
  for (const auto& c : p.coords()) {
    if (c == 0) continue;
    numerator_gcd = gcd(numerator_gcd, c.get_num());
    for (const auto& [q, e] : factorize(c.get_den()).factors) primes.insert(q);
  }
  for (const auto& [q, e] : factorize(numerator_gcd).factors) primes.insert(q);

  Integer bound = step.get_den();
  PrimeExponentMap out(static_cast<unsigned>(bound.get_ui()));
  for (const auto& prime : primes) {
    bool first = true;
    Rational best;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Valuation v = valuation(p[i], prime);
      if (v.is_infinite()) continue;
      Rational ratio(v.value(), static_cast<long>(p.weight(i)));
      ratio.canonicalize();
      if (first || ratio < best) best = ratio;
      first = false;
    }
    Rational multiples = best / step;
    multiples.canonicalize();
    out.set(prime, step * Rational(floor(multiples)));
  }
  return out;
}

/// Largest integer d with d^(q_i) | x_i for all i.
inline Integer wgcd(const WeightedPoint& p) {
  p.integer_coords();
  return step_exponents(p, 1).value().get_num();
}

/// Largest real d with d^(q_i) integral and dividing x_i for all i. Exponents
/// are multiples of 1/gcd(q_0, ..., q_n).
inline PrimeExponentMap abs_wgcd(const WeightedPoint& p) {
  p.integer_coords();
  return step_exponents(p, make_rational(1, p.weights().gcd()));
}

namespace detail {

// With an odd weight present, -1 acts nontrivially; make the first nonzero
// odd-weight coordinate positive.
inline WeightedPoint apply_sign_convention(const WeightedPoint& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.weight(i) % 2 == 1 && p[i] != 0) return p[i] < 0 ? star(Rational(-1), p) : p;
  }
  return p;
}

}  // namespace detail

/// The integral representative with wgcd 1, (1/wgcd(p)) * p. Rational points are
/// accepted and land on the same representative as any integral rescaling.
inline WeightedPoint normalize(const WeightedPoint& p) {
  return detail::apply_sign_convention(star_inverse(step_exponents(p, 1), p));
}

enum class HeightMode { multiplicative, logarithmic };

/// Height of a point over Q: max_i |x_i|^(1/q_i) on the normalized
/// representative. Held exactly as the pair (|x_k|, q_k) for the argmax k.
class WeightedHeight {
 public:
  WeightedHeight(Integer magnitude, unsigned weight, std::size_t argmax)
      : magnitude_(std::move(magnitude)), weight_(weight), argmax_(argmax) {}

  const Integer& magnitude() const noexcept { return magnitude_; }
  unsigned weight() const noexcept { return weight_; }
  std::size_t argmax_index() const noexcept { return argmax_; }

  long double log() const {
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, magnitude_.get_mpz_t());
    return (std::log(static_cast<long double>(mantissa)) + exp2 * std::log(2.0L)) / weight_;
  }
  long double value() const { return std::exp(log()); }
  long double operator()(HeightMode mode) const { return mode == HeightMode::logarithmic ? log() : value(); }

  /// Correctly rounded to `digits` significant digits from exact integer roots.
  /// Plain notation below 10^digits, otherwise "d.ddde+N".
  std::string decimal(unsigned digits = 12) const {
    const long int_digits = static_cast<long>(iroot(magnitude_, weight_).get_str().size());
    long scale = static_cast<long>(digits) - int_digits;  // decimal places kept
    auto scaled_floor = [&](long places) {
      if (places >= 0) return iroot(magnitude_ * ipow(10, static_cast<unsigned long>(places) * weight_), weight_);
      return iroot(magnitude_ / ipow(10, static_cast<unsigned long>(-places) * weight_), weight_);
    };
    Integer t = (scaled_floor(scale + 1) + 5) / 10;
    if (t.get_str().size() > digits) {
      t /= 10;
      --scale;
    }
    std::string s = t.get_str();
    if (scale < 0) {
      const long exponent = static_cast<long>(s.size()) - 1 - scale;
      std::string mant = s.substr(0, 1);
      std::string frac = s.substr(1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) mant += "." + frac;
      return mant + "e+" + std::to_string(exponent);
    }
    if (static_cast<long>(s.size()) <= scale) s.insert(0, static_cast<std::size_t>(scale) - s.size() + 1, '0');
    std::string int_part = s.substr(0, s.size() - static_cast<std::size_t>(scale));
    std::string frac = s.substr(s.size() - static_cast<std::size_t>(scale));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac.empty() ? int_part : int_part + "." + frac;
  }

  /// Exact: |a|^(1/q) vs |b|^(1/r) compared as |a|^r vs |b|^q.
  std::strong_ordering operator<=>(const WeightedHeight& o) const {
    const Integer lhs = ipow(magnitude_, o.weight_), rhs = ipow(o.magnitude_, weight_);
    return lhs == rhs ? std::strong_ordering::equal
                      : (lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater);
  }
  bool operator==(const WeightedHeight& o) const { return (*this <=> o) == std::strong_ordering::equal; }

 private:
  Integer magnitude_;
  unsigned weight_;
  std::size_t argmax_;
};

/// Ties go to the lowest index.
inline WeightedHeight weighted_height(const WeightedPoint& p) {
  const WeightedPoint n = normalize(p);
  const unsigned long l = n.weights().lcm();
  std::size_t best = n.size();
  Integer best_power;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    Integer power = ipow(abs(n[i].get_num()), l / n.weight(i));
    if (best == n.size() || power > best_power) {
      best = i;
      best_power = std::move(power);
    }
  }
  return WeightedHeight(abs(n[best].get_num()), n.weight(best), best);
}

inline long double weighted_height(const WeightedPoint& p, HeightMode mode) { return weighted_height(p)(mode); }

}  // namespace wmod
