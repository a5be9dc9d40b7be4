#include "lucaskit/coxcat.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "lucaskit/errors.hpp"
#include "lucaskit/lucas.hpp"

namespace lucaskit {

CoxeterType::CoxeterType(Family family, unsigned param) : family_(family), param_(param) {
  switch (family_) {
    case Family::A:
    case Family::B:
      if (param_ < 1) throw InvalidArgument("A_n and B_n need n >= 1");
      break;
    case Family::D:
      if (param_ < 3) throw InvalidArgument("D_n needs n >= 3");
      break;
    case Family::I2:
      if (param_ < 2) throw InvalidArgument("I2(m) needs m >= 2");
      break;
    default:
      param_ = 0;
  }
}

CoxeterType CoxeterType::parse(const std::string& family, unsigned param) {
  static const std::pair<const char*, Family> names[] = {
      {"A", Family::A},   {"B", Family::B},   {"D", Family::D},   {"I2", Family::I2}, {"H3", Family::H3},
      {"H4", Family::H4}, {"F4", Family::F4}, {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}};
  for (const auto& [name, fam] : names) {
    if (family == name) return CoxeterType(fam, param);
  }
  throw InvalidArgument("unknown Coxeter type '" + family + "'");
}

bool CoxeterType::is_exceptional() const {
  return family_ != Family::A && family_ != Family::B && family_ != Family::D && family_ != Family::I2;
}

std::vector<unsigned> CoxeterType::degrees() const {
  std::vector<unsigned> d;
  switch (family_) {
    case Family::A:
      for (unsigned i = 2; i <= param_ + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (unsigned i = 1; i <= param_; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (unsigned i = 1; i + 1 <= param_; ++i) d.push_back(2 * i);
      d.push_back(param_);
      break;
    case Family::I2: d = {2, param_}; break;
    case Family::H3: d = {2, 6, 10}; break;
    case Family::H4: d = {2, 12, 20, 30}; break;
    case Family::F4: d = {2, 6, 8, 12}; break;
    case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case Family::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
  }
  return d;
}

unsigned CoxeterType::coxeter_number() const {
  const auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

std::string CoxeterType::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(param_);
    case Family::B: return "B" + std::to_string(param_);
    case Family::D: return "D" + std::to_string(param_);
    case Family::I2: return "I2(" + std::to_string(param_) + ")";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

namespace {

Poly2 divide_or_fail(const Poly2& num, const Poly2& den, const std::string& what) {
  try {
    return poly_exact_div(num, den);
  } catch (const NotDivisible& e) {
    throw InternalConsistency(what + " is not a polynomial: " + e.what());
  }
}

}  // namespace

Poly2 lucas_catalan(unsigned n) {
  return divide_or_fail(lucasnomial(2L * n, n), lucas(n + 1), "Lucas-Catalan C_" + std::to_string(n));
}

Poly2 fuss_catalan(unsigned n, unsigned k) {
  if (k == 0) throw InvalidArgument("Fuss-Catalan needs k >= 1");
  return divide_or_fail(lucasnomial(static_cast<long>(k + 1) * n, n), lucas(k * n + 1),
                        "Lucas-Fuss-Catalan C_{" + std::to_string(n) + "," + std::to_string(k) + "}");
}

bool verify_catalan_identity(unsigned n) {
  if (n < 2) throw InvalidArgument("Catalan identity needs n >= 2");
  const long m = 2L * n - 1;
  return lucas_catalan(n) == lucasnomial(m, n - 1) + Poly2::t() * lucasnomial(m, static_cast<long>(n) - 2);
}

bool verify_fuss_identity(unsigned n, unsigned k) {
  if (n < 2 || k < 1) throw InvalidArgument("Fuss identity needs n >= 2, k >= 1");
  const long top = static_cast<long>(k + 1) * n - 1;
  const Poly2 tail = lucasnomial(top, static_cast<long>(n) - 2);
  Poly2 rhs = lucasnomial(top, n - 1);
  for (unsigned m = 1; m <= k; ++m) {
    // first-row blocks with m leading forced dominoes
    rhs += pow(Poly2::t(), m) * pow(lucas(n - 1), m - 1) * lucas((k - m) * n + 1) * tail;
  }
  return fuss_catalan(n, k) == rhs;
}

Poly2 coxeter_catalan(const CoxeterType& w) { return coxeter_fuss_catalan(w, 1); }

Poly2 coxeter_fuss_catalan(const CoxeterType& w, unsigned k) {
  if (k == 0) throw InvalidArgument("Coxeter-Fuss-Catalan needs k >= 1");
  const unsigned h = w.coxeter_number();
  Poly2 num = 1;
  Poly2 den = 1;
  for (unsigned d : w.degrees()) {
    num *= lucas(k * h + d);
    den *= lucas(d);
  }
  if (w.is_exceptional()) return poly_exact_div(num, den);
  return divide_or_fail(num, den, "Cat^(" + std::to_string(k) + ") " + w.name());
}

bool verify_catD(unsigned n) {
  if (n < 3) throw InvalidArgument("Cat D_n identity needs n >= 3");
  const Poly2 rhs = poly_exact_div(lucas(3 * n - 2) * d_lucasnomial(2L * (n - 1), n - 1, 2), lucas(n));
  return coxeter_catalan(CoxeterType(CoxeterType::Family::D, n)) == rhs;
}

Poly2 gen_catD_quotient(unsigned l, unsigned k, unsigned m, unsigned d, unsigned n) {
  if (!(l >= 1 && l < k * d && k * d < m * d)) throw InvalidArgument("genCatD needs 1 <= l < kd < md");
  if (n < 1) throw InvalidArgument("genCatD needs n >= 1");
  const long top = static_cast<long>(m) * (n - 1);
  const long bottom = static_cast<long>(k) * n - 1;
  if (bottom > top) return {};  // the d-Lucasnomial vanishes
  const long index = static_cast<long>(d * m - l) * n - static_cast<long>(m - 1) * d;
  if (index <= 0) throw InvalidArgument("genCatD numerator index is not positive");
  const unsigned g = std::gcd(k * d, k * d - l);
  return poly_exact_div(lucas(static_cast<unsigned>(index)) * d_lucasnomial(top, bottom, d), lucas(g * n));
}

bool verify_genCatD(unsigned l, unsigned k, unsigned m, unsigned d, unsigned n) {
  try {
    return gen_catD_quotient(l, k, m, d, n).all_coeffs_nonnegative();
  } catch (const NotDivisible&) {
    return false;
  }
}

Poly2 rational_catalan(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw InvalidArgument("rational Catalan needs positive a, b");
  if (std::gcd(a, b) != 1) {
    throw NotCoprime("rational Catalan needs gcd(a,b) = 1, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return divide_or_fail(lucasnomial(a + b, a), lucas(a + b),
                        "rational Catalan (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Poly2 narayana(unsigned n, unsigned k) {
  if (!(1 <= k && k <= n)) throw InvalidArgument("Narayana needs 1 <= k <= n");
  return poly_exact_div(lucasnomial(n, k) * lucasnomial(n, static_cast<long>(k) - 1), lucas(n));
}

std::string Finding::to_json_line() const {
  nlohmann::ordered_json j;
  j["op"] = op;
  j["params"] = nlohmann::ordered_json::parse(params.empty() ? "{}" : params);
  j["status"] = status;
  j["detail"] = detail;
  return j.dump();
}

std::vector<Finding> narayana_sweep(unsigned max_n) {
  std::vector<Finding> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      Finding f{"narayana", R"({"n":)" + std::to_string(n) + R"(,"k":)" + std::to_string(k) + "}", "pass", ""};
      try {
        const Poly2 p = narayana(n, k);
        if (!p.all_coeffs_nonnegative()) {
          f.status = "finding";
          f.detail = "negative coefficient: " + p.to_string();
        }
      } catch (const NotDivisible& e) {
        f.status = "finding";
        f.detail = std::string("not a polynomial: ") + e.what();
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Finding> rational_catalan_sweep(unsigned max_b) {
  std::vector<Finding> out;
  for (unsigned b = 2; b <= max_b; ++b) {
    for (unsigned a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      Finding f{"rational", R"({"a":)" + std::to_string(a) + R"(,"b":)" + std::to_string(b) + "}", "pass", ""};
      try {
        const Poly2 p = rational_catalan(a, b);
        if (!p.all_coeffs_nonnegative()) {
          f.status = "finding";
          f.detail = "negative coefficient: " + p.to_string();
        }
      } catch (const InternalConsistency& e) {
        f.status = "fail";
        f.detail = e.what();
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace lucaskit
