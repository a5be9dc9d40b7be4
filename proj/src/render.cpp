#include "lucaskit/render.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lucaskit {

namespace {

// Cell grid plus the unit edges of a path, shared by both renderers.
struct Scene {
  int width = 0;
  int height = 0;
  std::vector<int> begin;  // per row
  std::vector<std::vector<CellState>> cells;
  std::vector<std::pair<int, int>> path_points;  // lattice points in order
};

Scene make_scene(const Shape& shape, std::vector<std::vector<CellState>> cells, const std::optional<LatticePath>& path) {
  Scene sc;
  sc.cells = std::move(cells);
  sc.height = static_cast<int>(sc.cells.size());
  for (int i = 0; i < sc.height; ++i) {
    sc.begin.push_back(shape.row_begin(i));
    sc.width = std::max(sc.width, shape.row_begin(i) + static_cast<int>(sc.cells[i].size()));
  }
  if (path) {
    int x = path->start_x;
    int y = path->start_y;
    sc.path_points.emplace_back(x, y);
    for (Step s : path->steps) {
      if (s == Step::N) {
        ++y;
      } else {
        --x;
      }
      sc.path_points.emplace_back(x, y);
    }
    for (const auto& [px, py] : sc.path_points) {
      sc.width = std::max(sc.width, px);
      sc.height = std::max(sc.height, py);
    }
  }
  return sc;
}

std::vector<std::vector<CellState>> tiling_cells(const Tiling& tiling) {
  std::vector<std::vector<CellState>> out;
  for (const auto& row : tiling.rows) out.push_back(cells_of(row));
  return out;
}

std::string ascii(const Scene& sc) {
  // Lattice point (x,y) sits at column 4x, line 2(height-y).
  const int cols = 4 * sc.width + 1;
  const int lines = 2 * sc.height + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(lines), std::string(static_cast<std::size_t>(cols), ' '));
  auto at = [&](int line, int col) -> char& { return canvas[line][col]; };
  for (int row = 0; row < static_cast<int>(sc.cells.size()); ++row) {
    const int line = 2 * (sc.height - row) - 1;
    for (int rel = 0; rel < static_cast<int>(sc.cells[row].size()); ++rel) {
      const int col = sc.begin[row] + rel;
      for (int dx = 1; dx <= 3; ++dx) {
        at(line - 1, 4 * col + dx) = '-';
        at(line + 1, 4 * col + dx) = '-';
      }
      for (int c : {4 * col, 4 * col + 4}) {
        at(line - 1, c) = '+';
        at(line + 1, c) = '+';
        at(line, c) = '|';
      }
    }
  }
  for (int row = 0; row < static_cast<int>(sc.cells.size()); ++row) {
    const int line = 2 * (sc.height - row) - 1;
    for (int rel = 0; rel < static_cast<int>(sc.cells[row].size()); ++rel) {
      const int center = 4 * (sc.begin[row] + rel) + 2;
      switch (sc.cells[row][rel]) {
        case CellState::Blank: break;
        case CellState::Monomino: at(line, center) = 'o'; break;
        case CellState::DominoLeft:
          at(line, center) = 'o';
          for (int dx = 1; dx <= 3; ++dx) at(line, center + dx) = '-';
          break;
        case CellState::DominoRight: at(line, center) = 'o'; break;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < sc.path_points.size(); ++i) {
    const auto [x0, y0] = sc.path_points[i];
    const auto [x1, y1] = sc.path_points[i + 1];
    at(2 * (sc.height - y0), 4 * x0) = '#';
    at(2 * (sc.height - y1), 4 * x1) = '#';
    if (x0 == x1) {
      at(2 * (sc.height - std::max(y0, y1)) + 1, 4 * x0) = '#';
    } else {
      for (int dx = 1; dx <= 3; ++dx) at(2 * (sc.height - y0), 4 * std::min(x0, x1) + dx) = '#';
    }
  }
  std::ostringstream os;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

std::string svg(const Scene& sc) {
  constexpr int unit = 30;
  constexpr int margin = 10;
  const int w = sc.width * unit + 2 * margin;
  const int h = sc.height * unit + 2 * margin;
  auto px = [&](double x) { return margin + x * unit; };
  auto py = [&](double y) { return margin + (sc.height - y) * unit; };
  std::ostringstream os;
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << w << R"(" height=")" << h << R"(" viewBox="0 0 )" << w
     << ' ' << h << R"(">)" << '\n';
  os << R"(<g stroke="black" stroke-width="1" fill="none">)" << '\n';
  for (int row = 0; row < static_cast<int>(sc.cells.size()); ++row) {
    for (int rel = 0; rel < static_cast<int>(sc.cells[row].size()); ++rel) {
      const int col = sc.begin[row] + rel;
      os << R"(<rect x=")" << px(col) << R"(" y=")" << py(row + 1) << R"(" width=")" << unit << R"(" height=")" << unit
         << R"("/>)" << '\n';
    }
  }
  os << "</g>\n<g fill=\"black\" stroke=\"black\" stroke-width=\"2\">\n";
  for (int row = 0; row < static_cast<int>(sc.cells.size()); ++row) {
    for (int rel = 0; rel < static_cast<int>(sc.cells[row].size()); ++rel) {
      const CellState c = sc.cells[row][rel];
      if (c == CellState::Blank) continue;
      const double cx = px(sc.begin[row] + rel + 0.5);
      const double cy = py(row + 0.5);
      os << R"(<circle cx=")" << cx << R"(" cy=")" << cy << R"(" r="4"/>)" << '\n';
      if (c == CellState::DominoLeft) {
        os << R"(<line x1=")" << cx << R"(" y1=")" << cy << R"(" x2=")" << cx + unit << R"(" y2=")" << cy << R"("/>)"
           << '\n';
      }
    }
  }
  os << "</g>\n";
  if (!sc.path_points.empty()) {
    os << R"(<polyline fill="none" stroke="black" stroke-width="5" stroke-linecap="round" points=")";
    for (std::size_t i = 0; i < sc.path_points.size(); ++i) {
      os << (i ? " " : "") << px(sc.path_points[i].first) << ',' << py(sc.path_points[i].second);
    }
    os << R"("/>)" << '\n';
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_ascii(const Shape& shape, const Tiling& tiling, const std::optional<LatticePath>& path) {
  return ascii(make_scene(shape, tiling_cells(tiling), path));
}

std::string render_ascii(const PartialTiling& partial) {
  return ascii(make_scene(partial.shape, partial.rows, partial.path));
}

std::string render_svg(const Shape& shape, const Tiling& tiling, const std::optional<LatticePath>& path) {
  return svg(make_scene(shape, tiling_cells(tiling), path));
}

std::string render_svg(const PartialTiling& partial) { return svg(make_scene(partial.shape, partial.rows, partial.path)); }

}  // namespace lucaskit
