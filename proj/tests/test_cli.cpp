#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest_poly.hpp"

#include <sstream>

#include "lucaskit/cli.hpp"
#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/json_io.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/render.hpp"

using namespace lucaskit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr Tile M = Tile::Monomino;
constexpr Tile D = Tile::Domino;

}  // namespace

TEST_CASE("polynomial subcommands") {
  CHECK(run({"lucasnomial", "--n", "4", "--k", "2"}).out == "s^4 + 3*s^2*t + 2*t^2\n");
  CHECK(run({"lucasnomial", "--n", "6", "--k", "3", "--at", "2,-1"}).out == "20\n");
  CHECK(run({"catalan", "--n", "0"}).out == "1\n");
  CHECK(run({"lucas", "--n", "30", "--at", "1,1"}).out == "832040\n");
  CHECK(run({"coxeter", "--type", "E8", "--at", "2,-1"}).out == "25080\n");
  const Run json = run({"--format", "json", "lucas", "--n", "3"});
  CHECK(json.code == 0);
  CHECK(poly_from_json(parse_json(json.out)) == lucas(3));
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "recursion", "--max-n", "6"}).code == 0);
  CHECK(run({"rational", "--a", "2", "--b", "4"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"lucasnomial", "--n", "x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const Run inv = run({"verify", "involution", "--n", "4", "--k", "2", "--r", "1"});
  CHECK(inv.code == 0);
}

TEST_CASE("analysis output") {
  const Run csv = run({"--format", "csv", "analyze", "--expr", "catalan:3"});
  CHECK(csv.out == "k,a_k\n0,1\n1,6\n2,10\n3,3\n");
  const Run pretty = run({"analyze", "--expr", "catalan:3"});
  CHECK(pretty.out.find("real_rooted yes") != std::string::npos);
}

TEST_CASE("involution on the worked example") {
  const Run r = run({"involution", "apply", "--example", "752", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("level 1: case (d)") != std::string::npos);
  CHECK(r.out.find("type (7,4,2)") != std::string::npos);
  const Run j = run({"--format", "json", "involution", "apply", "--example", "752"});
  CHECK(extended_from_json(parse_json(j.out)) == example_752_image());
}

TEST_CASE("named quantities") {
  CHECK(named_quantity("lucasnomial:6,3") == lucasnomial(6, 3));
  CHECK(named_quantity("catalan:4") == lucas_catalan(4));
  CHECK(named_quantity("coxeter:I2,5,2") == coxeter_fuss_catalan(CoxeterType(CoxeterType::Family::I2, 5), 2));
  CHECK_THROWS_AS(named_quantity("nope:1"), InvalidArgument);
  CHECK_THROWS_AS(named_quantity("lucasnomial:6"), InvalidArgument);
}

TEST_CASE("json round trips") {
  const Poly2 p = lucasnomial(7, 3);
  CHECK(poly_from_json(parse_json(to_json(p).dump())) == p);
  const Shape sh({5, 3}, {2});
  CHECK(shape_from_json(to_json(sh)) == sh);
  const Tiling tl{{{M, M, D, M}, {D, M, M}, {M, D}, {M, M}, {M}}};
  CHECK(tiling_from_json(to_json(tl)) == tl);
  for (const auto& v : {PathVariant::binomial(5, 2), PathVariant::catalan(3), PathVariant::fuss_catalan(2, 3),
                        PathVariant::d_divisible(3, 1, 2)}) {
    CHECK(variant_from_json(to_json(v)) == v);
    for (const auto& part : enumerate_partials(v)) CHECK(partial_from_json(to_json(part)) == part);
  }
  const ExtendedTiling e = example_752();
  CHECK(extended_from_json(to_json(e)) == e);
  const RectangleTiling r = to_rectangle_model(partial_from_tiling(tl, PathVariant::binomial(6, 3)));
  CHECK(rectangle_from_json(to_json(r)) == r);
  CHECK_THROWS_AS(parse_json("{not json"), InvalidArgument);
  CHECK_THROWS_AS(tiling_from_json(parse_json(R"({"rows":[["X"]]})")), InvalidArgument);
}

TEST_CASE("rendering") {
  const Tiling tl{{{M, M, D, M}, {D, M, M}, {M, D}, {M, M}, {M}}};
  const auto v = PathVariant::binomial(6, 3);
  const std::string ascii = render_ascii(v.shape(), tl, path_from_tiling(tl, v));
  CHECK(ascii.find("o---o") != std::string::npos);
  CHECK(ascii.find('#') != std::string::npos);
  const std::string svg = render_svg(partial_from_tiling(tl, v));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  const Run r = run({"--format", "svg", "tilings", "render", "--example", "path"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
}
