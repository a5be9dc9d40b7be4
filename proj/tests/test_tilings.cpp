#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest_poly.hpp"

#include <set>

#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/tiling.hpp"

using namespace lucaskit;

namespace {

constexpr Tile M = Tile::Monomino;
constexpr Tile D = Tile::Domino;
constexpr CellState B = CellState::Blank;
constexpr CellState Mo = CellState::Monomino;
constexpr CellState L = CellState::DominoLeft;
constexpr CellState R = CellState::DominoRight;

const Poly2 s = Poly2::s();
const Poly2 t = Poly2::t();

Poly2 st(unsigned a, unsigned b) { return Poly2::monomial(1, a, b); }

mpz_class fib(unsigned long n) {
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

// Brute force: bitmask b has bit i set when a domino starts at cell i.
std::set<RowTiling> brute_row_tilings(int len) {
  std::set<RowTiling> out;
  for (unsigned mask = 0; mask < (1U << len); ++mask) {
    RowTiling row;
    bool ok = true;
    for (int i = 0; i < len && ok;) {
      if ((mask >> i) & 1U) {
        if (i + 1 >= len || ((mask >> (i + 1)) & 1U)) ok = false;
        row.push_back(D);
        i += 2;
      } else {
        row.push_back(M);
        ++i;
      }
    }
    if (ok) out.insert(row);
  }
  return out;
}

}  // namespace

TEST_CASE("row tilings") {
  for (int len = 0; len <= 14; ++len) {
    const auto& rows = row_tilings(len);
    CHECK(rows.size() == fib(len + 1));
    CHECK(std::set<RowTiling>(rows.begin(), rows.end()) == brute_row_tilings(len));
    for (const auto& row : rows) CHECK(covered_length(row) == len);
  }
  CHECK(row_tilings(2).front() == RowTiling{M, M});
  CHECK_THROWS(row_tilings(-1));
}

TEST_CASE("row weight is the Lucas polynomial") {
  for (unsigned len = 0; len <= 12; ++len) {
    Poly2 sum;
    for (const auto& row : row_tilings(static_cast<int>(len))) sum += row_weight(row);
    CHECK(sum == lucas(len + 1));
  }
}

TEST_CASE("shapes") {
  CHECK(Shape::staircase(4).outer() == std::vector<int>{3, 2, 1});
  CHECK(Shape::staircase(1).num_rows() == 0);
  CHECK(Shape::d_staircase(4, 2).outer() == std::vector<int>{7, 5, 3, 1});
  CHECK(Shape::d_staircase(3, 1).outer() == std::vector<int>{2, 1});
  const Shape skew({5, 3}, {2});
  CHECK(skew.is_skew());
  CHECK(skew.row_length(0) == 3);
  CHECK(skew.row_length(1) == 3);
  CHECK(skew.row_length(5) == 0);
  CHECK_THROWS_AS(Shape({2, 3}), InvalidArgument);
  CHECK_THROWS_AS(Shape({3, 2}, {4}), InvalidArgument);
}

TEST_CASE("tiling enumeration and shape weights") {
  CHECK(enumerate_tilings(Shape::staircase(4)).size() == 6);  // 3 * 2 * 1
  CHECK(shape_weight(Shape::staircase(4)) == lucastorial(4));
  for (int n = 1; n <= 7; ++n) CHECK(shape_weight(Shape::staircase(n)) == lucastorial(static_cast<unsigned>(n)));
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(shape_weight(Shape::d_staircase(n, d)) == d_lucastorial(static_cast<unsigned>(n), static_cast<unsigned>(d)));
    }
  }
  std::size_t visited = 0;
  for_each_tiling(Shape::staircase(5), [&](const Tiling&) { ++visited; });
  CHECK(visited == 5 * 3 * 2 * 1);
  CHECK(tiling_weight(Tiling{{{M, M, D, M}, {D, M, M}, {M, D}, {M, M}, {M}}}) == st(9, 3));
}

TEST_CASE("binomial path and partial tiling of the staircase example") {
  const Tiling tiling{{{M, M, D, M}, {D, M, M}, {M, D}, {M, M}, {M}}};
  const auto variant = PathVariant::binomial(6, 3);
  const LatticePath path = path_from_tiling(tiling, variant);
  CHECK(path.start_x == 3);
  CHECK(path.word() == "WNNWNNNWN");
  using NK = NorthKind;
  CHECK(path.labels == std::vector<NK>{NK::NL, NK::NI, NK::NL, NK::NI, NK::NI, NK::NL});
  const PartialTiling p = partial_from_tiling(tiling, variant);
  CHECK(p.rows.size() == 6);
  CHECK(p.rows[0] == std::vector<CellState>{B, B, L, R, Mo});
  CHECK(p.rows[1] == std::vector<CellState>{L, R, B, B});
  CHECK(p.rows[2] == std::vector<CellState>{B, L, R});
  CHECK(p.rows[3] == std::vector<CellState>{Mo, B});
  CHECK(p.rows[4] == std::vector<CellState>{Mo});
  CHECK(partial_weight(p) == st(3, 3));
  // blank runs of lengths 2, 2, 1, 1
  CHECK(blank_weight(p) == lucas(3) * lucas(3) * lucas(2) * lucas(2));
  CHECK(completion_count(p) == 4);
  CHECK(row_strips(p).front() == RowTiling{D, M});
}

TEST_CASE("Catalan path and partial tiling") {
  const Tiling tiling{{{M, D, M, M}, {M, M, M, M}, {D, M}, {M, M}, {M}}};
  const LatticePath path = path_from_tiling(tiling, PathVariant::catalan(3));
  CHECK(path.start_x == 2);
  CHECK(path.word() == "WNNWNNNN");
  const PartialTiling p = partial_from_tiling(tiling, PathVariant::catalan(3));
  CHECK(fixed_tiles(p.rows[0]) == RowTiling{D});
  CHECK(p.rows[0][1] == L);
  CHECK(p.rows[1] == std::vector<CellState>{Mo, B, B, B});
  CHECK(p.rows[2] == std::vector<CellState>{L, R, Mo});
  CHECK(partial_weight(p) == st(2, 2));
}

TEST_CASE("Fuss-Catalan path and first-row rule") {
  // delta_9 with k = 2; the first row has dominoes at columns 2-3 and 5-6.
  Tiling tiling{{{M, D, M, D, M, M}, {M, M, M, M, M, M, M}, {M, M, M, M, M, M}, {M, M, M, M, M}, {D, M, M}, {M, M, M},
                 {M, M}, {M}}};
  const auto variant = PathVariant::fuss_catalan(3, 2);
  const LatticePath path = path_from_tiling(tiling, variant);
  CHECK(path.start_x == 2);
  CHECK(path.word() == "WNNNNWNNNNN");
  const PartialTiling p = partial_from_tiling(tiling, variant);
  CHECK(p.rows[0] == std::vector<CellState>{B, L, R, Mo, L, R, B, B});
  for (int i = 1; i <= 3; ++i) CHECK(fixed_tiles(p.rows[i]) == RowTiling{M});
  CHECK(p.rows[4] == std::vector<CellState>{L, R, Mo, Mo});
  CHECK(partial_weight(p) == st(6, 3));
}

TEST_CASE("d-divisible path and partial tiling") {
  const Tiling tiling{{{D, M, D, M, M}, {M, D, D}, {M, M, M}, {M}}};
  const auto variant = PathVariant::d_divisible(4, 2, 2);
  const LatticePath path = path_from_tiling(tiling, variant);
  CHECK(path.start_x == 4);
  CHECK(path.word() == "WNWWNWNN");
  const PartialTiling p = partial_from_tiling(tiling, variant);
  CHECK(p.rows[0] == std::vector<CellState>{B, B, B, L, R, Mo, Mo});
  CHECK(p.rows[1] == std::vector<CellState>{B, L, R, L, R});
  CHECK(fixed_tiles(p.rows[2]).empty());
  CHECK(fixed_tiles(p.rows[3]).empty());
  CHECK(partial_weight(p) == st(2, 3));
}

TEST_CASE("binomial block partitions sum to Lucasnomials") {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BlockReport rep = verify_block_partition(PathVariant::binomial(n, k));
      CHECK_MESSAGE(rep.ok(), n, ",", k);
      CHECK(rep.sum == lucasnomial(n, k));
      CHECK(rep.tiling_count == 0 + [&] {
        mpz_class f = 1;
        for (int i = 2; i <= n; ++i) f *= fib(static_cast<unsigned long>(i));
        return f.get_ui();
      }());
    }
  }
}

TEST_CASE("Catalan, Fuss and d-divisible block partitions") {
  for (int n = 0; n <= 3; ++n) {
    const BlockReport rep = verify_block_partition(PathVariant::catalan(n));
    CHECK_MESSAGE(rep.ok(), n);
    CHECK(rep.sum == lucas_catalan(static_cast<unsigned>(n)));
  }
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const BlockReport rep = verify_block_partition(PathVariant::fuss_catalan(n, k));
    CHECK_MESSAGE(rep.ok(), n, ",", k);
    CHECK(rep.sum == fuss_catalan(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  }
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        const BlockReport rep = verify_block_partition(PathVariant::d_divisible(n, k, d));
        CHECK_MESSAGE(rep.ok(), n, ",", k, ",", d);
        CHECK(rep.sum == d_lucasnomial(static_cast<unsigned>(n), static_cast<unsigned>(k), static_cast<unsigned>(d)));
      }
    }
  }
}

TEST_CASE("variant validation") {
  CHECK_THROWS_AS(PathVariant::binomial(3, 4), InvalidArgument);
  CHECK_THROWS_AS(PathVariant::d_divisible(3, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(PathVariant::fuss_catalan(3, 0), InvalidArgument);
  CHECK(PathVariant::catalan(3).height() == 6);
  CHECK(PathVariant::fuss_catalan(3, 2).height() == 9);
  CHECK(PathVariant::binomial(5, 2).divisor() == lucastorial(1) * lucastorial(2) * lucastorial(3) * lucas(1));
}

TEST_CASE("skew numerator shape") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) CHECK(verify_skew_numerator(n, d));
  }
}

TEST_CASE("assembling binomial partials") {
  using NK = NorthKind;
  const PartialTiling p = assemble_binomial(3, {NK::NL, NK::NI, NK::NI}, {{D}, {}, {}});
  CHECK(p.path.start_x == 1);
  CHECK(p.path.word() == "WNNN");
  CHECK(partial_weight(p) == st(0, 1));
  const PartialTiling q = assemble_binomial(3, {NK::NI, NK::NI, NK::NL}, {{M}, {M}, {}});
  CHECK(q.path.word() == "NNWN");
  CHECK(partial_weight(q) == st(2, 0));
  CHECK_THROWS_AS(assemble_binomial(3, {NK::NL, NK::NI, NK::NI}, {{M, M}, {}, {}}), InvalidArgument);
  CHECK_THROWS_AS(assemble_binomial(3, {NK::NL, NK::NI, NK::NI}, {{D}, {M}, {}}), InvalidArgument);
  CHECK_THROWS_AS(assemble_binomial(3, {NK::NL, NK::NI}, {{D}, {M}}), InvalidArgument);
}
