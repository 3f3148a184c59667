#pragma once

// Laska's reduction of an integral Weierstrass equation
//     y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// to a minimal model with a1, a3 in {0, 1} and a2 in {-1, 0, 1}.

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wmod/arith.hpp"

namespace wmod {

struct WeierstrassEquation {
  Integer a1, a2, a3, a4, a6;

  Integer b2() const { return a1 * a1 + 4 * a2; }
  Integer b4() const { return a1 * a3 + 2 * a4; }
  Integer b6() const { return a3 * a3 + 4 * a6; }
  Integer b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }

  Integer discriminant() const {
    const Integer B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }

  std::string str() const {
    return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," + a4.get_str() + "," + a6.get_str() +
           "]";
  }

  bool operator==(const WeierstrassEquation&) const = default;
};

struct CInvariants {
  Integer c4, c6;
  bool operator==(const CInvariants&) const = default;
};

inline CInvariants c_invariants(const WeierstrassEquation& e) {
  const Integer b2 = e.b2(), b4 = e.b4();
  return {b2 * b2 - 24 * b4, -b2 * b2 * b2 + 36 * b2 * b4 - 216 * e.b6()};
}

struct ScaleCandidate {
  Integer u;
  Integer x_u;  // c4 / u^4
  Integer y_u;  // c6 / u^6
};

/// All u > 0 with u^4 | c4 and u^6 | c6, largest first.
inline std::vector<ScaleCandidate> u_candidates(const Integer& c4, const Integer& c6) {
  if (c4 == 0 && c6 == 0) throw domain_error("c4 = c6 = 0: singular cubic");
  const Integer g = gcd(c4, c6);
  std::vector<std::pair<Integer, unsigned long>> prime_powers;
  for (const auto& [p, e] : factorize(g).factors) {
    const Valuation v4 = valuation(c4, p), v6 = valuation(c6, p);
    unsigned long top = std::numeric_limits<unsigned long>::max();
    if (v4.is_finite()) top = std::min<unsigned long>(top, static_cast<unsigned long>(v4.value() / 4));
    if (v6.is_finite()) top = std::min<unsigned long>(top, static_cast<unsigned long>(v6.value() / 6));
    if (top > 0) prime_powers.emplace_back(p, top);
  }
  std::vector<Integer> divisors{1};
  for (const auto& [p, top] : prime_powers) {
    const std::size_t n = divisors.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= top; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end(), [](const Integer& a, const Integer& b) { return a > b; });
  std::vector<ScaleCandidate> out;
  for (auto& u : divisors) out.push_back({u, c4 / ipow(u, 4), c6 / ipow(u, 6)});
  return out;
}

struct LaskaResult {
  WeierstrassEquation model;
  /// Delta(input) == u^12 * Delta(model).
  Integer u;
  /// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
  Rational r, s, t;
};

namespace detail {

inline bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

inline Integer mod(const Integer& a, unsigned long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return r;
}

// Steps 4 and 5: the lexicographically smallest (a1, a2, a3) in the residue
// sets whose a4, a6 come out integral for the given target c-invariants.
inline std::optional<WeierstrassEquation> solve_residue_model(const Integer& x_u, const Integer& y_u) {
  for (long a1 : {0L, 1L}) {
    if (mod(Integer(a1 * a1 * a1 * a1) - x_u, 8) != 0) continue;
    for (long a2 : {-1L, 0L, 1L}) {
      if (mod(Integer(a2 * a2 * a2 + a1 * a1 * a1 * a1 * a1 * a1) + y_u, 3) != 0) continue;
      for (long a3 : {0L, 1L}) {
        const Integer b2 = a1 * a1 + 4 * a2;
        const Integer b4_num = b2 * b2 - x_u;
        if (!divides(24, b4_num)) continue;
        const Integer b4 = b4_num / 24;
        const Integer a4_num = b4 - a1 * a3;
        if (!divides(2, a4_num)) continue;
        const Integer b6_num = -b2 * b2 * b2 + 36 * b2 * b4 - y_u;
        if (!divides(216, b6_num)) continue;
        const Integer a6_num = b6_num / 216 - a3 * a3;
        if (!divides(4, a6_num)) continue;
        return WeierstrassEquation{a1, a2, a3, a4_num / 2, a6_num / 4};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline LaskaResult laska_reduce(const WeierstrassEquation& e) {
  if (e.discriminant() == 0) throw domain_error("singular cubic (discriminant is zero)");
  const auto [c4, c6] = c_invariants(e);
  for (const auto& cand : u_candidates(c4, c6)) {
    auto model = detail::solve_residue_model(cand.x_u, cand.y_u);
    if (!model) continue;
    // Step 6.
    const Rational u(cand.u);
    Rational s = (u * Rational(model->a1) - Rational(e.a1)) / 2;
    Rational r = (u * u * Rational(model->a2) - Rational(e.a2) + s * Rational(e.a1) + s * s) / 3;
    Rational t = (u * u * u * Rational(model->a3) - Rational(e.a3) - r * Rational(e.a1)) / 2;
    return {*model, cand.u, r, s, t};
  }
  // u = 1 always admits a residue-class model; reaching here means c4, c6 are
  // not the invariants of an integral equation.
  throw domain_error("no integral model found for " + e.str());
}

}  // namespace wmod
