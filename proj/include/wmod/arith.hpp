#pragma once

// Exact integer/rational arithmetic on top of GMP, deterministic primality,
// integer factorization and p-adic valuations.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmod/errors.hpp"

namespace wmod {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// base^exp for a signed exponent; base must be nonzero when exp < 0.
inline Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw domain_error("zero raised to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exp);
  }
  Integer num = ipow(base.get_num(), static_cast<unsigned long>(exp));
  Integer den = ipow(base.get_den(), static_cast<unsigned long>(exp));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

/// n/d in lowest terms. The two-argument mpq constructor does not reduce.
inline Rational make_rational(long n, long d) {
  if (d == 0) throw domain_error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Floor of the q-th root of a nonnegative integer.
inline Integer iroot(const Integer& n, unsigned long q) {
  if (n < 0) throw domain_error("root of a negative integer");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
  return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses a decimal integer or a fraction "a/b".
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw domain_error("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

/// p-adic valuation. Zero has infinite valuation, which compares greater than
/// every finite value and is skipped by min-style reductions.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::int64_t v) : value_(v), infinite_(false) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  std::int64_t value() const {
    if (infinite_) throw domain_error("infinite valuation has no finite value");
    return value_;
  }

  constexpr bool operator==(const Valuation& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const Valuation& o) const noexcept {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }

  std::string str() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

namespace detail {

inline const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kBound = 10000;
    std::vector<bool> composite(kBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test to base a, for odd n > 3.
inline bool strong_probable_prime(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or n itself when the polynomial x^2 + c cycles without one.
inline Integer pollard_brent(const Integer& n, unsigned long c) {
  auto step = [&](Integer& v) {
    v = v * v + c;
    v %= n;
  };
  Integer y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  constexpr unsigned long kBatch = 128;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < kBatch && i < r - k; ++i) {
        step(y);
        Integer diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      Integer diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g;
}

}  // namespace detail

/// Deterministic primality check: trial division by primes below 10^4, then
/// strong probable-prime tests to the first 24 prime bases. The base set is a
/// proof of primality below 3.3e24; above that it is a strong pseudoprime test
/// with a fixed base set, so its answer is reproducible.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : detail::small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    if (Integer(p) * p > n) return true;
  }
  static constexpr std::array<unsigned long, 24> kBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (unsigned long a : kBases) {
    if (!detail::strong_probable_prime(n, a)) return false;
  }
  return true;
}

/// unit * prod(p^e). Keys iterate in increasing order.
struct PrimeFactorization {
  int unit = 1;
  std::map<Integer, unsigned long> factors;

  Integer value() const {
    Integer r = unit;
    for (const auto& [p, e] : factors) r *= ipow(p, e);
    return r;
  }

  /// e.g. "-2^12*3^9*101*233"; "1" / "-1" for units.
  std::string str() const {
    std::string out = unit < 0 ? "-" : "";
    if (factors.empty()) return out + "1";
    bool first = true;
    for (const auto& [p, e] : factors) {
      if (!first) out += "*";
      first = false;
      out += p.get_str();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  bool operator==(const PrimeFactorization&) const = default;
};

inline PrimeFactorization factorize(const Integer& n) {
  if (n == 0) throw domain_error("zero has no factorization");
  PrimeFactorization out;
  out.unit = n < 0 ? -1 : 1;
  Integer m = abs(n);
  for (unsigned long p : detail::small_primes()) {
    if (Integer(p) * p > m) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) out.factors[Integer(p)] = e;
  }
  std::vector<Integer> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      ++out.factors[c];
      continue;
    }
    Integer root = iroot(c, 2);
    if (root * root == c) {
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    Integer d = c;
    for (unsigned long k = 1; d == c; ++k) d = detail::pollard_brent(c, k);
    pending.push_back(d);
    pending.push_back(c / d);
  }
  return out;
}

/// Largest e with p^e | n; infinity for n = 0.
inline Valuation valuation(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw domain_error("valuation base " + p.get_str() + " is not prime");
  if (n == 0) return Valuation::infinity();
  Integer rest;
  return Valuation(static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t())));
}

template <class U>
inline Valuation valuation(const __gmp_expr<mpz_t, U>& n, const Integer& p) {
  return valuation(Integer(n), p);
}

/// Signed valuation num - den of a rational.
inline Valuation valuation(const Rational& q, const Integer& p) {
  if (q == 0) {
    if (!is_prime(p)) throw domain_error("valuation base " + p.get_str() + " is not prime");
    return Valuation::infinity();
  }
  return Valuation(valuation(q.get_num(), p).value() - valuation(q.get_den(), p).value());
}

}  // namespace wmod
