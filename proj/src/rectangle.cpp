#include "lucaskit/rectangle.hpp"

#include <algorithm>

#include "lucaskit/errors.hpp"

namespace lucaskit {

RectangleTiling to_rectangle_model(const PartialTiling& partial) {
  if (partial.variant.kind != PathVariant::Kind::Binomial) {
    throw InvalidArgument("the rectangle model needs a binomial partial tiling");
  }
  RectangleTiling rect;
  rect.n = partial.variant.n;
  rect.k = partial.variant.k;
  const auto strips = row_strips(partial);
  const auto& labels = partial.path.labels;
  // Reading rows from the top down gives the rectangle path from the corner.
  for (std::size_t i = labels.size(); i-- > 0;) {
    if (labels[i] == NorthKind::NI) {
      rect.path.push_back('N');
      rect.rows.push_back(strips[i]);
    } else {
      rect.path.push_back('E');
      rect.columns.push_back(strips[i]);
    }
  }
  return rect;
}

PartialTiling from_rectangle_model(const RectangleTiling& rect) {
  const auto e_steps = static_cast<int>(std::count(rect.path.begin(), rect.path.end(), 'E'));
  const auto n_steps = static_cast<int>(std::count(rect.path.begin(), rect.path.end(), 'N'));
  if (e_steps + n_steps != static_cast<int>(rect.path.size())) throw MalformedModel("rectangle path must use only N and E");
  if (e_steps != rect.k || e_steps + n_steps != rect.n) throw MalformedModel("rectangle path does not fit the k x (n-k) rectangle");
  if (static_cast<int>(rect.rows.size()) != n_steps || static_cast<int>(rect.columns.size()) != e_steps) {
    throw MalformedModel("rectangle needs one row per N step and one column per E step");
  }
  std::vector<NorthKind> labels(static_cast<std::size_t>(rect.n));
  std::vector<RowTiling> strips(static_cast<std::size_t>(rect.n));
  int seen_e = 0;
  int seen_n = 0;
  for (std::size_t step = 0; step < rect.path.size(); ++step) {
    const std::size_t row = rect.path.size() - 1 - step;
    if (rect.path[step] == 'N') {
      const RowTiling& r = rect.rows[seen_n++];
      if (covered_length(r) != seen_e) throw MalformedModel("rectangle row " + std::to_string(seen_n) + " has the wrong length");
      labels[row] = NorthKind::NI;
      strips[row] = r;
    } else {
      const RowTiling& c = rect.columns[seen_e++];
      if (covered_length(c) != seen_n) throw MalformedModel("rectangle column " + std::to_string(seen_e) + " has the wrong height");
      if (!c.empty() && c.front() != Tile::Domino) {
        throw MalformedModel("rectangle column " + std::to_string(seen_e) + " does not begin with a domino");
      }
      labels[row] = NorthKind::NL;
      strips[row] = c;
    }
  }
  try {
    return assemble_binomial(rect.n, labels, strips);
  } catch (const InvalidArgument& e) {
    throw MalformedModel(e.what());
  }
}

Poly2 rectangle_weight(const RectangleTiling& rect) {
  Tiling all;
  all.rows = rect.rows;
  all.rows.insert(all.rows.end(), rect.columns.begin(), rect.columns.end());
  return tiling_weight(all);
}

}  // namespace lucaskit
