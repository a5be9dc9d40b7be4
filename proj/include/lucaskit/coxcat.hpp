#pragma once

#include <string>
#include <vector>

#include "lucaskit/poly2.hpp"

namespace lucaskit {

/// Finite irreducible Coxeter type with its degrees d_1..d_n.
class CoxeterType {
 public:
  enum class Family : std::uint8_t { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

  /// param is the rank for A, B, D and m for I2; ignored for exceptional types.
  CoxeterType(Family family, unsigned param = 0);
  /// Parses "A", "B", "D", "I2", "H3", ... with the numeric parameter.
  static CoxeterType parse(const std::string& family, unsigned param = 0);

  Family family() const { return family_; }
  unsigned param() const { return param_; }
  bool is_exceptional() const;
  /// Degrees as listed in the classification table (D_n lists n last).
  std::vector<unsigned> degrees() const;
  /// Coxeter number h: the largest degree.
  unsigned coxeter_number() const;
  std::string name() const;

 private:
  Family family_;
  unsigned param_;
};

/// (1/{n+1}) {2n brace n}.
Poly2 lucas_catalan(unsigned n);

/// (1/{kn+1}) {(k+1)n brace n}.
Poly2 fuss_catalan(unsigned n, unsigned k);

/// C_n == {2n-1 brace n-1} + t {2n-1 brace n-2}, n >= 2.
bool verify_catalan_identity(unsigned n);

/// C_{n,k} == {(k+1)n-1 brace n-1}
///            + sum_{m=1..k} t^m {n-1}^(m-1) {(k-m)n+1} {(k+1)n-1 brace n-2}.
/// The m-th term collects first-row blocks whose forced dominoes end at mn.
bool verify_fuss_identity(unsigned n, unsigned k);

/// prod {h + d_i} / prod {d_i}.
Poly2 coxeter_catalan(const CoxeterType& w);

/// prod {kh + d_i} / prod {d_i}. For A, B, D and I2 a failed division is an
/// InternalConsistency error; for exceptional types NotDivisible propagates.
Poly2 coxeter_fuss_catalan(const CoxeterType& w, unsigned k);

/// Cat D_n == ({3n-2}/{n}) {2(n-1):2 brace n-1:2}, n >= 3.
bool verify_catD(unsigned n);

/// ({(dm-l)n-(m-1)d} / {gn}) {m(n-1):d brace kn-1:d} is a polynomial with
/// nonnegative coefficients, g = gcd(kd, kd-l). Requires l < kd < md.
bool verify_genCatD(unsigned l, unsigned k, unsigned m, unsigned d, unsigned n);

/// The genCatD quotient itself (zero when kn-1 > m(n-1)).
Poly2 gen_catD_quotient(unsigned l, unsigned k, unsigned m, unsigned d, unsigned n);

/// (1/{a+b}) {a+b brace a}; throws NotCoprime unless gcd(a,b) = 1.
Poly2 rational_catalan(unsigned a, unsigned b);

/// (1/{n}) {n brace k}{n brace k-1}, 1 <= k <= n. A failed division
/// propagates as NotDivisible.
Poly2 narayana(unsigned n, unsigned k);

/// One line of a findings report.
struct Finding {
  std::string op;
  std::string params;  // JSON object text, e.g. {"n":4,"k":2}
  std::string status;  // pass | fail | finding
  std::string detail;

  std::string to_json_line() const;
};

/// Nonnegativity sweep of narayana(n,k) for 1 <= k <= n <= max_n.
std::vector<Finding> narayana_sweep(unsigned max_n);

/// Polynomiality and nonnegativity of rational_catalan(a,b), coprime a < b <= max_b.
std::vector<Finding> rational_catalan_sweep(unsigned max_b);

}  // namespace lucaskit
