#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lucaskit/poly1.hpp"

namespace lucaskit {

struct Monomial {
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  /// Weight under deg s = 1, deg t = 2.
  std::uint64_t weight() const { return std::uint64_t{s} + 2 * std::uint64_t{t}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: decreasing s exponent, then increasing t exponent.
inline bool term_order(const Monomial& a, const Monomial& b) {
  return a.s != b.s ? a.s > b.s : a.t < b.t;
}

struct Term {
  Monomial mono;
  mpz_class coeff;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Coefficient sequence of a weighted-homogeneous polynomial:
/// p = sum_k coeffs[k] * s^(weight - 2k) * t^k.
struct CoeffSeq {
  std::uint64_t weight = 0;
  std::vector<mpz_class> coeffs;
  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;
};

/// Sparse bivariate polynomial in s,t with arbitrary-precision integer
/// coefficients. Terms are kept sorted in term_order with no zero
/// coefficients, so structural equality is polynomial equality.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(long c);  // NOLINT(google-explicit-constructor): integers embed as constants
  explicit Poly2(const mpz_class& c);
  /// Builds from arbitrary terms; duplicates are merged and zeros dropped.
  explicit Poly2(std::vector<Term> terms);

  static Poly2 s();
  static Poly2 t();
  static Poly2 monomial(const mpz_class& c, std::uint32_t s_exp, std::uint32_t t_exp);
  static Poly2 from_coeff_seq(const CoeffSeq& seq);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  mpz_class coeff(std::uint32_t s_exp, std::uint32_t t_exp) const;

  bool all_coeffs_nonnegative() const;
  /// Weight shared by all terms, or -1 when the polynomial is zero or mixed.
  long long homogeneous_weight() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2 operator-() const;

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  mpz_class eval(const mpz_class& s0, const mpz_class& t0) const;
  /// Substitutes univariate images for s and t.
  Poly1 substitute(const Poly1& s_image, const Poly1& t_image) const;

  /// Pretty form, e.g. "s^4 + 3*s^2*t + 2*t^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Poly2 poly_add(const Poly2& p, const Poly2& q);
Poly2 poly_mul(const Poly2& p, const Poly2& q);

/// Exact quotient p / q. Throws DivisionByZero for q == 0 and NotDivisible
/// when no integer-coefficient polynomial r satisfies q * r == p.
Poly2 poly_exact_div(const Poly2& p, const Poly2& q);

mpz_class poly_eval(const Poly2& p, const mpz_class& s0, const mpz_class& t0);

/// s -> 1 + q, t -> -q.
Poly1 specialize_q(const Poly2& p);

/// Throws InvalidArgument for p == 0 and NotWeightedHomogeneous for mixed
/// weights. Trailing zero coefficients are trimmed, so coeffs.back() != 0.
CoeffSeq coeff_view(const Poly2& p);

/// Generating function f(y) = sum a_k y^k of the coefficient sequence.
Poly1 coeff_generating_function(const CoeffSeq& seq);

Poly2 pow(const Poly2& p, unsigned e);

}  // namespace lucaskit
