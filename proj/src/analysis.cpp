#include "lucaskit/analysis.hpp"

#include <sstream>

#include "lucaskit/poly1.hpp"

namespace lucaskit {

bool is_unimodal(const std::vector<mpz_class>& a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

bool is_log_concave(const std::vector<mpz_class>& a) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const mpz_class prev = k > 0 ? a[k - 1] : mpz_class(0);
    const mpz_class next = k + 1 < a.size() ? a[k + 1] : mpz_class(0);
    if (a[k] * a[k] < prev * next) return false;
  }
  return true;
}

CoeffReport analyze(const Poly2& p) {
  const CoeffSeq seq = coeff_view(p);
  CoeffReport r;
  r.weight = seq.weight;
  r.coeffs = seq.coeffs;
  r.unimodal = is_unimodal(r.coeffs);
  r.log_concave = is_log_concave(r.coeffs);
  r.real_rooted = real_rooted(coeff_generating_function(seq));
  return r;
}

std::string to_csv(const CoeffReport& report) {
  std::ostringstream os;
  os << "k,a_k\n";
  for (std::size_t k = 0; k < report.coeffs.size(); ++k) os << k << ',' << report.coeffs[k].get_str() << '\n';
  return os.str();
}

}  // namespace lucaskit
