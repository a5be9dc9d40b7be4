#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lucaskit {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[i] is the coefficient of x^i. The top coefficient is never
/// zero; the zero polynomial has an empty coefficient vector.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<mpq_class> coeffs);
  Poly1(std::initializer_list<long> coeffs);

  static Poly1 constant(const mpq_class& c);
  static Poly1 monomial(const mpq_class& c, std::size_t exp);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t exp) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  /// True when every coefficient is an integer.
  bool is_integral() const;

  mpq_class eval(const mpq_class& x) const;
  Poly1 derivative() const;

  /// Divides by |content| so that the coefficients become coprime integers.
  /// The sign is preserved, so sign sequences are unaffected.
  Poly1 primitive() const;
  Poly1 monic() const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1 operator-() const;

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder of polynomial division over Q.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);

/// Monic greatest common divisor over Q (zero when both inputs are zero).
Poly1 gcd(Poly1 a, Poly1 b);

/// Number of distinct real roots, counted with a Sturm sequence in exact
/// rational arithmetic.
std::size_t count_distinct_real_roots(const Poly1& f);

/// True iff every complex root of f is real. f must be nonzero.
bool real_rooted(const Poly1& f);

}  // namespace lucaskit
