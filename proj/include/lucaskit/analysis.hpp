#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "lucaskit/poly2.hpp"

namespace lucaskit {

struct CoeffReport {
  std::uint64_t weight = 0;
  std::vector<mpz_class> coeffs;
  bool unimodal = false;
  bool log_concave = false;
  bool real_rooted = false;
};

bool is_unimodal(const std::vector<mpz_class>& a);
/// a_k^2 >= a_{k-1} a_{k+1}, out-of-range terms read as 0.
bool is_log_concave(const std::vector<mpz_class>& a);

/// Coefficient-sequence diagnostics; NotWeightedHomogeneous propagates.
CoeffReport analyze(const Poly2& p);

/// "k,a_k" lines with a header.
std::string to_csv(const CoeffReport& report);

}  // namespace lucaskit
