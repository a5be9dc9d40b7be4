#include "lucaskit/json_io.hpp"

#include <algorithm>

#include "lucaskit/errors.hpp"

namespace lucaskit {

namespace {

Json tiles_json(const RowTiling& row) {
  Json out = Json::array();
  for (Tile tile : row) out.push_back(tile == Tile::Monomino ? "M" : "D");
  return out;
}

RowTiling tiles_from(const Json& j) {
  RowTiling row;
  for (const auto& tok : j) {
    const std::string s = tok.get<std::string>();
    if (s == "M") {
      row.push_back(Tile::Monomino);
    } else if (s == "D") {
      row.push_back(Tile::Domino);
    } else {
      throw InvalidArgument("tile token must be M or D, got '" + s + "'");
    }
  }
  return row;
}

std::vector<CellState> cells_from(const Json& j) {
  std::vector<CellState> cells;
  for (const auto& tok : j) {
    const std::string s = tok.get<std::string>();
    if (s == "M") {
      cells.push_back(CellState::Monomino);
    } else if (s == "D") {
      cells.push_back(CellState::DominoLeft);
      cells.push_back(CellState::DominoRight);
    } else if (s == ".") {
      cells.push_back(CellState::Blank);
    } else {
      throw InvalidArgument("partial tiling token must be M, D or '.', got '" + s + "'");
    }
  }
  return cells;
}

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Poly2& p) {
  Json terms = Json::array();
  for (const auto& term : p.terms()) {
    terms.push_back(Json{{"s", term.mono.s}, {"t", term.mono.t}, {"c", term.coeff.get_str()}});
  }
  return Json{{"terms", terms}};
}

Poly2 poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      mpz_class c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw InvalidArgument("coefficient is not a decimal integer");
      terms.push_back(Term{Monomial{t.at("s").get<std::uint32_t>(), t.at("t").get<std::uint32_t>()}, c});
    }
    return Poly2(std::move(terms));
  });
}

Json to_json(const Shape& shape) { return Json{{"outer", shape.outer()}, {"inner", shape.inner()}}; }

Shape shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    return Shape(j.at("outer").get<std::vector<int>>(), j.value("inner", std::vector<int>{}));
  });
}

Json to_json(const Tiling& tiling) {
  Json rows = Json::array();
  for (const auto& row : tiling.rows) rows.push_back(tiles_json(row));
  return Json{{"rows", rows}};
}

Tiling tiling_from_json(const Json& j) {
  return guarded("tiling", [&] {
    Tiling t;
    for (const auto& row : j.at("rows")) t.rows.push_back(tiles_from(row));
    return t;
  });
}

Json to_json(const PathVariant& v) {
  static const char* names[] = {"binomial", "catalan", "fuss", "ddivisible"};
  return Json{{"kind", names[static_cast<int>(v.kind)]}, {"n", v.n}, {"k", v.k}, {"d", v.d}};
}

PathVariant variant_from_json(const Json& j) {
  return guarded("variant", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (kind == "binomial") return PathVariant::binomial(n, j.at("k").get<int>());
    if (kind == "catalan") return PathVariant::catalan(n);
    if (kind == "fuss") return PathVariant::fuss_catalan(n, j.at("k").get<int>());
    if (kind == "ddivisible") return PathVariant::d_divisible(n, j.at("k").get<int>(), j.at("d").get<int>());
    throw InvalidArgument("unknown variant kind '" + kind + "'");
  });
}

Json to_json(const PartialTiling& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json tokens = Json::array();
    for (CellState c : row) {
      if (c == CellState::Blank) tokens.push_back(".");
      if (c == CellState::Monomino) tokens.push_back("M");
      if (c == CellState::DominoLeft) tokens.push_back("D");
    }
    rows.push_back(tokens);
  }
  Json labels = Json::array();
  for (NorthKind k : p.path.labels) labels.push_back(k == NorthKind::NI ? "NI" : "NL");
  return Json{{"variant", to_json(p.variant)},
              {"shape", to_json(p.shape)},
              {"rows", rows},
              {"path", p.path.word()},
              {"start", {p.path.start_x, p.path.start_y}},
              {"labels", labels}};
}

PartialTiling partial_from_json(const Json& j) {
  return guarded("partial tiling", [&] {
    PartialTiling p;
    p.variant = variant_from_json(j.at("variant"));
    p.shape = p.variant.shape();
    const auto start = j.at("start");
    p.path.start_x = start.at(0).get<int>();
    p.path.start_y = start.at(1).get<int>();
    bool after_west = false;
    for (char c : j.at("path").get<std::string>()) {
      if (c == 'N') {
        p.path.steps.push_back(Step::N);
        if (!j.contains("labels")) p.path.labels.push_back(after_west ? NorthKind::NL : NorthKind::NI);
        after_west = false;
      } else if (c == 'W') {
        p.path.steps.push_back(Step::W);
        after_west = true;
      } else {
        throw InvalidArgument(std::string("path step must be N or W, got '") + c + "'");
      }
    }
    if (j.contains("labels")) {
      for (const auto& l : j.at("labels")) {
        const std::string s = l.get<std::string>();
        if (s != "NI" && s != "NL") throw InvalidArgument("label must be NI or NL");
        p.path.labels.push_back(s == "NI" ? NorthKind::NI : NorthKind::NL);
      }
    }
    for (const auto& row : j.at("rows")) p.rows.push_back(cells_from(row));
    const auto north = static_cast<std::size_t>(std::count(p.path.steps.begin(), p.path.steps.end(), Step::N));
    if (p.path.labels.size() != north || p.rows.size() != north) {
      throw InvalidArgument("partial tiling needs one label and one row per N step");
    }
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      if (static_cast<int>(p.rows[i].size()) != p.shape.row_length(static_cast<int>(i))) {
        throw InvalidArgument("row " + std::to_string(i + 1) + " of the partial tiling has the wrong length");
      }
    }
    if (p.variant.kind == PathVariant::Kind::Binomial) {
      // Rebuilding checks that the rows and path are mutually consistent.
      const PartialTiling canon = assemble_binomial(p.variant.n, p.path.labels, row_strips(p));
      if (canon != p) throw InvalidArgument("partial tiling is inconsistent with its path");
    }
    return p;
  });
}

Json to_json(const ExtendedTiling& e) {
  Json strips = Json::array();
  for (const auto& s : e.strips) strips.push_back(tiles_json(s));
  return Json{{"B", to_json(e.b)}, {"strips", strips}};
}

ExtendedTiling extended_from_json(const Json& j) {
  return guarded("extended tiling", [&] {
    ExtendedTiling e;
    e.b = partial_from_json(j.at("B"));
    for (const auto& s : j.at("strips")) e.strips.push_back(tiles_from(s));
    e.type();
    return e;
  });
}

Json to_json(const RectangleTiling& r) {
  Json rows = Json::array();
  Json cols = Json::array();
  for (const auto& row : r.rows) rows.push_back(tiles_json(row));
  for (const auto& col : r.columns) cols.push_back(tiles_json(col));
  return Json{{"k", r.k}, {"n", r.n}, {"path", r.path}, {"rows", rows}, {"columns", cols}};
}

RectangleTiling rectangle_from_json(const Json& j) {
  return guarded("rectangle", [&] {
    RectangleTiling r;
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.path = j.at("path").get<std::string>();
    for (const auto& row : j.at("rows")) r.rows.push_back(tiles_from(row));
    for (const auto& col : j.at("columns")) r.columns.push_back(tiles_from(col));
    return r;
  });
}

Json to_json(const CoeffReport& r) {
  Json coeffs = Json::array();
  for (const auto& a : r.coeffs) coeffs.push_back(a.get_str());
  return Json{{"weight", r.weight},
              {"coeffs", coeffs},
              {"unimodal", r.unimodal},
              {"log_concave", r.log_concave},
              {"real_rooted", r.real_rooted}};
}

}  // namespace lucaskit
