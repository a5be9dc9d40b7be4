// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "lucaskit/analysis.hpp"
#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/involution.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/tiling.hpp"

using namespace lucaskit;
using Family = CoxeterType::Family;

namespace {

struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok) ++failures;
  }
  int failures = 0;
};

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Gaussian binomial through q-factorials, independent of the Lucas code.
Poly1 gaussian(unsigned n, unsigned k) {
  auto q_int = [](unsigned m) { return Poly1(std::vector<mpq_class>(m, mpq_class(1))); };
  Poly1 num{1};
  Poly1 den{1};
  for (unsigned i = 1; i <= k; ++i) {
    num *= q_int(n - k + i);
    den *= q_int(i);
  }
  return divmod(num, den).first;
}

mpq_class coxeter_integer(const CoxeterType& w) {
  mpq_class r = 1;
  for (unsigned d : w.degrees()) r *= mpq_class(w.coxeter_number() + d, d);
  r.canonicalize();
  return r;
}

std::vector<CoxeterType> desk_types() {
  std::vector<CoxeterType> out;
  for (unsigned n = 1; n <= 6; ++n) {
    out.emplace_back(Family::A, n);
    out.emplace_back(Family::B, n);
    if (n >= 3) out.emplace_back(Family::D, n);
  }
  for (unsigned m = 2; m <= 12; ++m) out.emplace_back(Family::I2, m);
  for (auto f : {Family::H3, Family::H4, Family::F4, Family::E6, Family::E7, Family::E8}) out.emplace_back(f);
  return out;
}

void criterion1(Check& c) {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BlockReport rep = verify_block_partition(PathVariant::binomial(n, k));
      c.expect(rep.violations.empty() && rep.sum == lucasnomial(n, k), "binomial " + std::to_string(n) + "," + std::to_string(k));
    }
  }
}

void criterion2(Check& c) {
  for (long n = 2; n <= 12; ++n) {
    for (long k = 1; k < n; ++k) c.expect(verify_lucasnomial_recursion(n, k), "recursion " + std::to_string(n) + "," + std::to_string(k));
  }
  for (long n = 0; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long r = 0; r <= k; ++r) c.expect(verify_symmetry_identity(n, k, r), "symmetry " + std::to_string(n));
    }
  }
}

void criterion3(Check& c) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        const InvolutionReport rep = verify_involution(n, k, r);
        c.expect(rep.ok(), "type (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")" +
                               (rep.violations.empty() ? "" : ": " + rep.violations.front()));
      }
    }
  }
  std::string trace;
  const ExtendedTiling img = iota(example_752(), &trace);
  c.expect(trace == "dcbacdd", "752 trace " + trace);
  c.expect(img == example_752_image(), "752 final configuration");
}

void criterion4(Check& c) {
  for (unsigned n = 0; n <= 4; ++n) {
    const BlockReport rep = verify_block_partition(PathVariant::catalan(static_cast<int>(n)));
    c.expect(rep.violations.empty() && rep.sum == lucas_catalan(n), "catalan " + std::to_string(n));
  }
  for (auto [n, k] : {std::pair{2U, 2U}, {3U, 2U}, {2U, 3U}}) {
    const BlockReport rep = verify_block_partition(PathVariant::fuss_catalan(static_cast<int>(n), static_cast<int>(k)));
    c.expect(rep.violations.empty() && rep.sum == fuss_catalan(n, k), "fuss " + std::to_string(n) + "," + std::to_string(k));
  }
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const auto v = PathVariant::d_divisible(static_cast<int>(n), static_cast<int>(k), static_cast<int>(d));
        const BlockReport rep = verify_block_partition(v);
        c.expect(rep.violations.empty() && rep.sum == d_lucasnomial(n, k, d), "ddivisible " + v.name());
      }
    }
  }
}

void criterion5(Check& c) {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned k = 0; k <= n; ++k) c.expect(poly_eval(lucasnomial(n, k), 2, -1) == binom(n, k), "binomial value");
  }
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (unsigned n = 0; n <= 6; ++n) c.expect(poly_eval(lucas_catalan(n), 2, -1) == catalan[n], "catalan value");
  for (const auto& w : desk_types()) {
    const mpq_class oracle = coxeter_integer(w);
    c.expect(oracle.get_den() == 1 && poly_eval(coxeter_catalan(w), 2, -1) == oracle.get_num(), "coxeter " + w.name());
  }
  const std::pair<Family, long> named[] = {{Family::H3, 32},   {Family::F4, 105},  {Family::H4, 280},
                                           {Family::E6, 833},  {Family::E7, 4160}, {Family::E8, 25080}};
  for (const auto& [f, value] : named) c.expect(poly_eval(coxeter_catalan(CoxeterType(f)), 2, -1) == value, CoxeterType(f).name());
  for (unsigned n = 0; n <= 30; ++n) {
    mpz_class f;
    mpz_fib_ui(f.get_mpz_t(), n);
    c.expect(poly_eval(lucas(n), 1, 1) == f, "fibonacci " + std::to_string(n));
  }
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= n; ++k) c.expect(specialize_q(lucasnomial(n, k)) == gaussian(n, k), "gaussian");
  }
}

void criterion6(Check& c) {
  for (unsigned m = 1; m <= 20; ++m) {
    for (unsigned n = 1; n <= 20; ++n) {
      const auto q = lucas_divides(m, n);
      c.expect(q.has_value() == (n % m == 0), "hoggatt-long " + std::to_string(m) + "|" + std::to_string(n));
      if (q) c.expect(q->all_coeffs_nonnegative(), "hoggatt-long quotient");
    }
  }
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned n = 1; n <= 12; ++n) c.expect(verify_gcd_lemma(m, n), "gcd lemma");
  }
}

std::string findings_note;

void criterion7(Check& c) {
  for (const auto& w : desk_types()) {
    for (unsigned k = 1; k <= 3; ++k) {
      try {
        const Poly2 p = coxeter_fuss_catalan(w, k);
        c.expect(p.all_coeffs_nonnegative(), "negative coefficient in " + w.name());
      } catch (const Error& e) {
        c.expect(false, w.name() + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  for (unsigned n = 3; n <= 6; ++n) c.expect(verify_catD(n), "catD " + std::to_string(n));
  for (unsigned md = 2; md <= 6; ++md) {
    for (unsigned d = 1; d <= md; ++d) {
      if (md % d != 0) continue;
      const unsigned m = md / d;
      for (unsigned k = 1; k * d < md; ++k) {
        for (unsigned l = 1; l < k * d; ++l) {
          for (unsigned n = 1; n <= 4; ++n) c.expect(verify_genCatD(l, k, m, d, n), "genCatD");
        }
      }
    }
  }
  int rational_findings = 0;
  for (const auto& f : rational_catalan_sweep(12)) {
    c.expect(f.status != "fail", "rational " + f.params + " " + f.detail);
    rational_findings += f.status == "finding";
  }
  int narayana_findings = 0;
  for (const auto& f : narayana_sweep(40)) narayana_findings += f.status == "finding";
  findings_note = " [findings: rational " + std::to_string(rational_findings) + ", narayana " +
                  std::to_string(narayana_findings) + "]";
}

void criterion8(Check& c) {
  auto all_good = [&](const Poly2& p, const std::string& what) {
    const CoeffReport r = analyze(p);
    c.expect(r.real_rooted && r.log_concave && r.unimodal, what);
  };
  for (unsigned n = 1; n <= 20; ++n) all_good(lucas(n), "lucas " + std::to_string(n));
  for (long n = 0; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) all_good(lucasnomial(n, k), "lucasnomial");
  }
  for (unsigned n = 0; n <= 6; ++n) all_good(lucas_catalan(n), "catalan " + std::to_string(n));
  for (unsigned n = 1; n <= 3; ++n) {
    all_good(coxeter_catalan(CoxeterType(Family::A, n)), "A");
    all_good(coxeter_catalan(CoxeterType(Family::B, n)), "B");
  }
  all_good(coxeter_catalan(CoxeterType(Family::D, 3)), "D3");
  all_good(coxeter_catalan(CoxeterType(Family::I2, 5)), "I2(5)");
  for (unsigned n = 1; n <= 30; ++n) c.expect(verify_chebyshev_bridge(n), "chebyshev " + std::to_string(n));
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"lucasnomial oracle equivalence", criterion1},
      {"recursion and symmetry", criterion2},
      {"involution suite", criterion3},
      {"Catalan, Fuss and d-divisible partitions", criterion4},
      {"classical specializations", criterion5},
      {"divisibility theorems", criterion6},
      {"polynomiality theorems", criterion7},
      {"coefficient analysis", criterion8},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string line = std::string(c.failures == 0 ? "PASS" : "FAIL") + " " + std::to_string(index) + " " + name;
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
    line += timing;
    if (index == 7) line += findings_note;
    for (const auto& p : c.problems) line += "; " + p;
    std::puts(line.c_str());
    failed += c.failures != 0;
  }
  return failed == 0 ? 0 : 1;
}
