#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest_poly.hpp"

#include "lucaskit/errors.hpp"
#include "lucaskit/involution.hpp"
#include "lucaskit/lucas.hpp"

using namespace lucaskit;

namespace {
constexpr Tile M = Tile::Monomino;
constexpr Tile D = Tile::Domino;
}  // namespace

TEST_CASE("strip operations") {
  const Strip s{M, D, M};
  CHECK(covered_length(s) == 4);
  CHECK(strip_first(s, 0).empty());
  CHECK(strip_first(s, 1) == Strip{M});
  CHECK(strip_first(s, 3) == Strip{M, D});
  CHECK(strip_last(s, 1) == Strip{M});
  CHECK(strip_last(s, 3) == Strip{D, M});
  CHECK(strip_last(s, 4) == s);
  CHECK(strip_reverse(s) == s);
  CHECK(strip_reverse(Strip{D, M}) == Strip{M, D});
  CHECK(strip_concat(Strip{D}, Strip{M}) == Strip{D, M});
  CHECK_THROWS_AS(strip_first(s, 2), BrokenDomino);
  CHECK_THROWS_AS(strip_last(s, 2), BrokenDomino);
  CHECK_THROWS_AS(strip_first(s, 5), InvalidArgument);
  CHECK_THROWS_AS(strip_last(s, -1), InvalidArgument);
}

TEST_CASE("point classification") {
  const Strip s{M, D, M};
  CHECK(classify_point(s, 0) == NorthKind::NI);
  CHECK(classify_point(s, 1) == NorthKind::NI);
  CHECK(classify_point(s, 2) == NorthKind::NL);
  CHECK(classify_point(s, 3) == NorthKind::NI);
  CHECK(classify_point(s, 4) == NorthKind::NI);
  CHECK(classify_point(s, 5) == NorthKind::NL);
  CHECK(classify_point(s, -1) == NorthKind::NL);
}

TEST_CASE("worked example of type (7,5,2)") {
  const ExtendedTiling e = example_752();
  CHECK(e.type() == ExtendedType{7, 5, 2});
  std::string trace;
  const ExtendedTiling img = iota(e, &trace);
  CHECK(trace == "dcbacdd");
  CHECK(img.type() == ExtendedType{7, 4, 2});
  CHECK(img == example_752_image());
  CHECK(extended_weight(img) == extended_weight(e));
  CHECK(iota(img) == e);
}

TEST_CASE("exhaustive check of small types") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int r = 0; r <= k; ++r) {
        const InvolutionReport rep = verify_involution(n, k, r);
        CHECK_MESSAGE(rep.ok(), n, ",", k, ",", r, rep.violations.empty() ? "" : " " + rep.violations.front());
        CHECK(rep.domain_sum == rep.lhs);
        CHECK(rep.image_sum == rep.rhs);
        CHECK(rep.domain_size == rep.image_class_size);
      }
    }
  }
}

TEST_CASE("r = 0 reduces to plain symmetry") {
  const InvolutionReport rep = verify_involution(5, 2, 0);
  CHECK(rep.ok());
  CHECK(rep.lhs == lucasnomial(5, 2));
  CHECK(rep.image_type == ExtendedType{5, 3, 0});
}

TEST_CASE("every top-level case occurs") {
  const InvolutionReport rep = verify_involution(6, 3, 1);
  CHECK(rep.ok());
  for (char c : {'a', 'b', 'c', 'd'}) CHECK_MESSAGE(rep.case_counts.count(c) == 1, c);
}

TEST_CASE("bad inputs") {
  ExtendedTiling e = example_752();
  e.strips[0] = {M, M};  // wrong length
  CHECK_THROWS_AS(e.type(), InvalidArgument);
  CHECK_THROWS_AS(iota(e), InvalidArgument);
  CHECK_THROWS_AS(enumerate_extended(3, 4, 0), InvalidArgument);
  CHECK_THROWS_AS(enumerate_extended(3, 2, 3), InvalidArgument);
  ExtendedTiling cat{enumerate_partials(PathVariant::catalan(2)).front(), {}};
  CHECK_THROWS_AS(cat.type(), InvalidArgument);
}
