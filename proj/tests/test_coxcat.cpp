#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest_poly.hpp"

#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/lucas.hpp"

using namespace lucaskit;
using Family = CoxeterType::Family;

namespace {

// Independent integer oracle: prod (kh + d_i) / d_i over rationals.
mpq_class integer_product(const CoxeterType& w, unsigned k) {
  mpq_class r = 1;
  for (unsigned d : w.degrees()) r *= mpq_class(k * w.coxeter_number() + d, d);
  r.canonicalize();
  return r;
}

std::vector<CoxeterType> small_types() {
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

}  // namespace

TEST_CASE("degrees and Coxeter numbers") {
  CHECK(CoxeterType(Family::A, 3).degrees() == std::vector<unsigned>{2, 3, 4});
  CHECK(CoxeterType(Family::D, 4).degrees() == std::vector<unsigned>{2, 4, 6, 4});
  CHECK(CoxeterType(Family::D, 5).coxeter_number() == 8);
  CHECK(CoxeterType(Family::E8).coxeter_number() == 30);
  CHECK(CoxeterType::parse("I2", 5).name() == "I2(5)");
  CHECK_THROWS_AS(CoxeterType::parse("G2"), InvalidArgument);
  CHECK_THROWS_AS(CoxeterType(Family::D, 2), InvalidArgument);
  CHECK_THROWS_AS(CoxeterType(Family::I2, 1), InvalidArgument);
}

TEST_CASE("Lucas-Catalan numbers") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (unsigned n = 0; n < 8; ++n) CHECK(poly_eval(lucas_catalan(n), 2, -1) == catalan[n]);
  CHECK(lucas_catalan(2) == Poly2::s() * Poly2::s() + 2 * Poly2::t());
  for (unsigned n = 2; n <= 10; ++n) CHECK(verify_catalan_identity(n));
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned k = 1; k <= 3; ++k) CHECK(verify_fuss_identity(n, k));
  }
  CHECK(poly_eval(fuss_catalan(3, 2), 2, -1) == 12);
  CHECK(fuss_catalan(2, 2) == Poly2::monomial(1, 4, 0) + Poly2::monomial(4, 2, 1) + Poly2::monomial(3, 0, 2));
  CHECK(fuss_catalan(0, 3) == 1);
  CHECK(fuss_catalan(4, 1) == lucas_catalan(4));
}

TEST_CASE("Coxeter-Catalan specializations match the integer oracle") {
  for (const auto& w : small_types()) {
    for (unsigned k = 1; k <= 3; ++k) {
      const Poly2 p = coxeter_fuss_catalan(w, k);
      CHECK_MESSAGE(p.all_coeffs_nonnegative(), w.name());
      const mpq_class oracle = integer_product(w, k);
      REQUIRE(oracle.get_den() == 1);
      CHECK_MESSAGE(poly_eval(p, 2, -1) == oracle.get_num(), w.name(), " k=", k);
    }
  }
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::H3)), 2, -1) == 32);
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::F4)), 2, -1) == 105);
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::H4)), 2, -1) == 280);
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::E6)), 2, -1) == 833);
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::E7)), 2, -1) == 4160);
  CHECK(poly_eval(coxeter_catalan(CoxeterType(Family::E8)), 2, -1) == 25080);
}

TEST_CASE("classical types agree with other Lucas analogues") {
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(coxeter_catalan(CoxeterType(Family::A, n)) == lucas_catalan(n + 1));
    CHECK(coxeter_catalan(CoxeterType(Family::B, n)) == d_lucasnomial(2 * n, n, 2));
  }
}

TEST_CASE("type D identities") {
  for (unsigned n = 3; n <= 6; ++n) CHECK(verify_catD(n));
  CHECK_THROWS_AS(verify_catD(2), InvalidArgument);
  for (unsigned md = 2; md <= 6; ++md) {
    for (unsigned d = 1; d <= md; ++d) {
      if (md % d != 0) continue;
      const unsigned m = md / d;
      for (unsigned k = 1; k * d < md; ++k) {
        for (unsigned l = 1; l < k * d; ++l) {
          for (unsigned n = 1; n <= 4; ++n) CHECK_MESSAGE(verify_genCatD(l, k, m, d, n), l, k, m, d, n);
        }
      }
    }
  }
  // l = 1, k = 1, m = 2, d = 2 gives the type D numbers up to a shift
  CHECK_THROWS_AS(gen_catD_quotient(2, 1, 2, 2, 3), InvalidArgument);
}

TEST_CASE("rational Catalan and Narayana") {
  CHECK(rational_catalan(2, 3) == lucas_catalan(2));
  CHECK(rational_catalan(3, 4) == lucas_catalan(3));
  CHECK(poly_eval(rational_catalan(3, 5), 2, -1) == 7);  // C(8,3)/8
  CHECK_THROWS_AS(rational_catalan(4, 6), NotCoprime);
  CHECK_THROWS_AS(rational_catalan(0, 3), InvalidArgument);
  CHECK(poly_eval(narayana(4, 2), 2, -1) == 6);
  CHECK(poly_eval(narayana(5, 3), 2, -1) == 20);
  CHECK(narayana(3, 1) == 1);
  CHECK_THROWS_AS(narayana(3, 4), InvalidArgument);
  // only the integer specialization of sum_k N(n,k) = C_n is claimed
  for (unsigned n = 1; n <= 8; ++n) {
    mpz_class total = 0;
    for (unsigned k = 1; k <= n; ++k) total += poly_eval(narayana(n, k), 2, -1);
    CHECK(total == poly_eval(lucas_catalan(n), 2, -1));
  }
}

TEST_CASE("sweeps") {
  const auto nar = narayana_sweep(12);
  CHECK(nar.size() == 78);
  for (const auto& f : nar) CHECK(f.status == "pass");
  const auto rat = rational_catalan_sweep(12);
  for (const auto& f : rat) CHECK(f.status != "fail");
  CHECK(rat.front().to_json_line() == R"({"op":"rational","params":{"a":1,"b":2},"status":"pass","detail":""})");
}
