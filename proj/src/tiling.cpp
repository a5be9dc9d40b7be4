#include "lucaskit/tiling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/lucas.hpp"

namespace lucaskit {

int covered_length(const RowTiling& row) {
  int n = 0;
  for (Tile tile : row) n += static_cast<int>(tile);
  return n;
}

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> outer, std::vector<int> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  while (!outer_.empty() && outer_.back() == 0) outer_.pop_back();
  while (!inner_.empty() && inner_.back() == 0) inner_.pop_back();
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    if (outer_[i] <= 0) throw InvalidArgument("shape parts must be positive");
    if (i > 0 && outer_[i] > outer_[i - 1]) throw InvalidArgument("shape parts must weakly decrease");
  }
  if (inner_.size() > outer_.size()) throw InvalidArgument("inner shape has more rows than outer shape");
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    if (inner_[i] < 0) throw InvalidArgument("inner parts must be nonnegative");
    if (i > 0 && inner_[i] > inner_[i - 1]) throw InvalidArgument("inner parts must weakly decrease");
    if (inner_[i] > outer_[i]) throw InvalidArgument("inner shape is not contained in outer shape");
  }
}

Shape Shape::staircase(int n) { return d_staircase(n, 1); }

Shape Shape::d_staircase(int n, int d) {
  if (n < 0 || d < 1) throw InvalidArgument("d_staircase needs n >= 0, d >= 1");
  std::vector<int> rows;
  for (int i = n; i >= 1; --i) rows.push_back(i * d - 1);
  return Shape(std::move(rows));
}

bool Shape::is_skew() const {
  return std::any_of(inner_.begin(), inner_.end(), [](int x) { return x > 0; });
}

std::string Shape::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < outer_.size(); ++i) os << (i ? "," : "") << outer_[i];
  os << ")";
  if (is_skew()) {
    os << "/(";
    for (std::size_t i = 0; i < inner_.size(); ++i) os << (i ? "," : "") << inner_[i];
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- tilings

const std::vector<RowTiling>& row_tilings(int length) {
  static std::mutex mutex;
  static std::vector<std::vector<RowTiling>> table{{RowTiling{}}, {RowTiling{Tile::Monomino}}};
  if (length < 0) throw InvalidArgument("negative row length");
  std::lock_guard lock(mutex);
  table.reserve(64);
  while (static_cast<int>(table.size()) <= length) {
    const std::size_t m = table.size();
    std::vector<RowTiling> next;
    for (const auto& rest : table[m - 1]) {
      RowTiling r{Tile::Monomino};
      r.insert(r.end(), rest.begin(), rest.end());
      next.push_back(std::move(r));
    }
    for (const auto& rest : table[m - 2]) {
      RowTiling r{Tile::Domino};
      r.insert(r.end(), rest.begin(), rest.end());
      next.push_back(std::move(r));
    }
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(length)];
}

void for_each_tiling(const Shape& shape, const std::function<void(const Tiling&)>& visit) {
  const int rows = shape.num_rows();
  std::vector<const std::vector<RowTiling>*> choices;
  for (int i = 0; i < rows; ++i) choices.push_back(&row_tilings(shape.row_length(i)));
  std::vector<std::size_t> index(static_cast<std::size_t>(rows), 0);
  Tiling tiling;
  tiling.rows.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) tiling.rows[i] = (*choices[i])[0];
  while (true) {
    visit(tiling);
    int i = rows - 1;
    while (i >= 0 && index[i] + 1 == choices[i]->size()) {
      index[i] = 0;
      tiling.rows[i] = (*choices[i])[0];
      --i;
    }
    if (i < 0) return;
    ++index[i];
    tiling.rows[i] = (*choices[i])[index[i]];
  }
}

std::vector<Tiling> enumerate_tilings(const Shape& shape) {
  std::vector<Tiling> out;
  for_each_tiling(shape, [&](const Tiling& t) { out.push_back(t); });
  return out;
}

Poly2 row_weight(const RowTiling& row) {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  for (Tile tile : row) (tile == Tile::Monomino ? a : b)++;
  return Poly2::monomial(1, a, b);
}

Poly2 tiling_weight(const Tiling& tiling) {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  for (const auto& row : tiling.rows) {
    for (Tile tile : row) (tile == Tile::Monomino ? a : b)++;
  }
  return Poly2::monomial(1, a, b);
}

Poly2 shape_weight(const Shape& shape) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for_each_tiling(shape, [&](const Tiling& t) {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    for (const auto& row : t.rows) {
      for (Tile tile : row) (tile == Tile::Monomino ? a : b)++;
    }
    ++counts[{a, b}];
  });
  std::vector<Term> terms;
  for (const auto& [mono, c] : counts) {
    terms.push_back(Term{Monomial{mono.first, mono.second}, mpz_class(static_cast<unsigned long>(c))});
  }
  return Poly2(std::move(terms));
}

// ---------------------------------------------------------------- paths

std::string LatticePath::word() const {
  std::string w;
  w.reserve(steps.size());
  for (Step s : steps) w.push_back(s == Step::N ? 'N' : 'W');
  return w;
}

std::vector<NorthStep> LatticePath::north_steps() const {
  std::vector<NorthStep> out;
  int x = start_x;
  std::size_t label = 0;
  for (Step s : steps) {
    if (s == Step::W) {
      --x;
    } else {
      out.push_back(NorthStep{x, labels.at(label++)});
    }
  }
  return out;
}

PathVariant PathVariant::binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgument("binomial variant needs 0 <= k <= n");
  return PathVariant{Kind::Binomial, n, k, 1};
}

PathVariant PathVariant::catalan(int n) {
  if (n < 0) throw InvalidArgument("catalan variant needs n >= 0");
  return PathVariant{Kind::Catalan, n, 1, 1};
}

PathVariant PathVariant::fuss_catalan(int n, int k) {
  if (n < 0 || k < 1) throw InvalidArgument("Fuss-Catalan variant needs n >= 0, k >= 1");
  return PathVariant{Kind::FussCatalan, n, k, 1};
}

PathVariant PathVariant::d_divisible(int n, int k, int d) {
  if (n < 0 || k < 0 || k > n || d < 1) throw InvalidArgument("d-divisible variant needs 0 <= k <= n, d >= 1");
  return PathVariant{Kind::DDivisible, n, k, d};
}

Shape PathVariant::shape() const {
  switch (kind) {
    case Kind::Binomial: return Shape::staircase(n);
    case Kind::Catalan: return Shape::staircase(2 * n);
    case Kind::FussCatalan: return Shape::staircase((k + 1) * n);
    case Kind::DDivisible: return Shape::d_staircase(n, d);
  }
  return {};
}

int PathVariant::start_x() const {
  switch (kind) {
    case Kind::Binomial: return k;
    case Kind::Catalan:
    case Kind::FussCatalan: return n > 0 ? n - 1 : 0;
    case Kind::DDivisible: return k * d;
  }
  return 0;
}

int PathVariant::height() const {
  switch (kind) {
    case Kind::Binomial: return n;
    case Kind::Catalan: return 2 * n;
    case Kind::FussCatalan: return (k + 1) * n;
    case Kind::DDivisible: return n;
  }
  return 0;
}

Poly2 PathVariant::divisor() const {
  const auto un = static_cast<unsigned>(n);
  const auto uk = static_cast<unsigned>(k);
  switch (kind) {
    case Kind::Binomial: return lucastorial(uk) * lucastorial(un - uk);
    case Kind::Catalan: return lucastorial(un) * lucastorial(un + 1);
    case Kind::FussCatalan: return lucastorial(un) * lucastorial(uk * un + 1);
    case Kind::DDivisible: {
      const auto ud = static_cast<unsigned>(d);
      return d_lucastorial(uk, ud) * d_lucastorial(un - uk, ud);
    }
  }
  return {};
}

Poly2 PathVariant::expected_sum() const {
  switch (kind) {
    case Kind::Binomial: return lucasnomial(n, k);
    case Kind::Catalan: return lucaskit::lucas_catalan(static_cast<unsigned>(n));
    case Kind::FussCatalan: return lucaskit::fuss_catalan(static_cast<unsigned>(n), static_cast<unsigned>(k));
    case Kind::DDivisible: return d_lucasnomial(n, k, static_cast<unsigned>(d));
  }
  return {};
}

std::string PathVariant::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Binomial: os << "binomial(n=" << n << ",k=" << k << ")"; break;
    case Kind::Catalan: os << "catalan(n=" << n << ")"; break;
    case Kind::FussCatalan: os << "fuss(n=" << n << ",k=" << k << ")"; break;
    case Kind::DDivisible: os << "ddivisible(n=" << n << ",k=" << k << ",d=" << d << ")"; break;
  }
  return os.str();
}

namespace {

// Bit x set iff a domino covers columns x and x+1 (1-based), i.e. an N step
// along the vertical line x would cross it.
std::uint64_t domino_mask(const RowTiling& row) {
  std::uint64_t mask = 0;
  int col = 0;  // cells covered so far
  for (Tile tile : row) {
    if (tile == Tile::Domino) {
      if (col + 1 >= 64) throw InvalidArgument("row too long for the path tracer");
      mask |= std::uint64_t{1} << (col + 1);
    }
    col += static_cast<int>(tile);
  }
  return mask;
}

// Greedy path. lengths/masks have one entry per row crossed by the path.
LatticePath trace_path(const PathVariant& v, const std::vector<int>& lengths,
                       const std::vector<std::uint64_t>& masks) {
  const int height = v.height();
  // d = 1 collapses the modular rule to the plain binomial rule.
  const bool modular = v.kind == PathVariant::Kind::DDivisible && v.d >= 2;
  LatticePath path;
  path.start_x = v.start_x();
  int x = path.start_x;
  int y = 0;
  bool after_west = false;
  std::vector<bool> used_line(static_cast<std::size_t>(std::max(x, 0)) + 2, false);
  while (y < height) {
    const int len = lengths[y];
    bool ok = x >= 0 && x <= len && ((masks[y] >> x) & 1U) == 0;
    int residue = 0;
    if (modular && ok) {
      residue = x % v.d;
      if (residue == v.d - 1) {
        ok = !used_line[x];
      } else if (residue != 0) {
        ok = false;
      }
    }
    if (ok) {
      path.steps.push_back(Step::N);
      NorthKind kind;
      if (modular) {
        kind = residue == 0 ? NorthKind::NI : NorthKind::NL;
        if (residue == v.d - 1) used_line[x] = true;
      } else {
        kind = after_west ? NorthKind::NL : NorthKind::NI;
      }
      path.labels.push_back(kind);
      ++y;
      after_west = false;
    } else {
      if (x <= 0) throw InternalConsistency("lattice path stuck at x=0 in " + v.name());
      path.steps.push_back(Step::W);
      --x;
      after_west = true;
    }
  }
  while (x > 0) {
    path.steps.push_back(Step::W);
    --x;
  }
  return path;
}

// Fills the fixed cells of one row according to the binomial rule.
void fix_binomial(std::vector<CellState>& out, const std::vector<CellState>& cells, const NorthStep& step) {
  const int len = static_cast<int>(cells.size());
  if (step.kind == NorthKind::NI) {
    for (int j = 0; j < std::min(step.x, len); ++j) out[j] = cells[j];
  } else {
    for (int j = std::max(step.x, 0); j < len; ++j) out[j] = cells[j];
  }
}

// Row-1 rule for Catalan (k = 1) and Fuss-Catalan partial tilings.
void fix_first_row_fuss(std::vector<CellState>& out, const std::vector<CellState>& cells, std::uint64_t mask,
                        const PathVariant& v, const LatticePath& path) {
  if (path.steps.empty() || path.steps.front() == Step::N) return;  // row 1 stays blank
  const int n = v.n;
  const int len = static_cast<int>(cells.size());
  auto domino_at = [&](int col) {  // domino covering columns col, col+1
    return col >= 1 && ((mask >> col) & 1U) != 0;
  };
  int m = 1;
  while (!(domino_at(m * n - 1) && !domino_at((m + 1) * n - 1))) {
    ++m;
    if (m * n - 1 > len) throw InternalConsistency("no Fuss index m found in " + v.name());
  }
  // Fixed: columns n-1 .. len except m*n+1 .. (m+1)*n-1 (1-based).
  for (int col = n - 1; col <= len; ++col) {
    if (col >= m * n + 1 && col <= (m + 1) * n - 1) continue;
    out[col - 1] = cells[col - 1];
  }
}

std::vector<std::vector<CellState>> fixed_rows(const PathVariant& v, const LatticePath& path,
                                               const std::vector<const std::vector<CellState>*>& cells,
                                               std::uint64_t first_mask) {
  const auto north = path.north_steps();
  std::vector<std::vector<CellState>> rows(north.size());
  for (std::size_t i = 0; i < north.size(); ++i) {
    rows[i].assign(cells[i]->size(), CellState::Blank);
    const bool first_row_special =
        i == 0 && (v.kind == PathVariant::Kind::Catalan || v.kind == PathVariant::Kind::FussCatalan);
    if (first_row_special) {
      fix_first_row_fuss(rows[i], *cells[i], first_mask, v, path);
    } else {
      fix_binomial(rows[i], *cells[i], north[i]);
    }
  }
  return rows;
}

std::string encode(const PathVariant& v, const LatticePath& path, const std::vector<std::vector<CellState>>& rows) {
  std::string key = v.name();
  key += '|';
  key += std::to_string(path.start_x);
  key += ':';
  key += path.word();
  for (const auto& row : rows) {
    key += '/';
    for (CellState c : row) {
      switch (c) {
        case CellState::Blank: key += '.'; break;
        case CellState::Monomino: key += 'M'; break;
        case CellState::DominoLeft: key += '<'; break;
        case CellState::DominoRight: key += '>'; break;
      }
    }
  }
  return key;
}

void check_tiling_fits(const Tiling& tiling, const Shape& shape) {
  if (static_cast<int>(tiling.rows.size()) != shape.num_rows()) {
    throw InvalidArgument("tiling has " + std::to_string(tiling.rows.size()) + " rows, shape " +
                          shape.to_string() + " has " + std::to_string(shape.num_rows()));
  }
  for (int i = 0; i < shape.num_rows(); ++i) {
    if (covered_length(tiling.rows[i]) != shape.row_length(i)) {
      throw InvalidArgument("row " + std::to_string(i + 1) + " of the tiling has the wrong length");
    }
  }
}

struct RowData {
  std::vector<int> lengths;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<CellState>> cells;
};

RowData row_data(const Tiling& tiling, const PathVariant& v) {
  const Shape shape = v.shape();
  check_tiling_fits(tiling, shape);
  RowData data;
  const int height = v.height();
  for (int i = 0; i < height; ++i) {
    if (i < shape.num_rows()) {
      data.lengths.push_back(shape.row_length(i));
      data.masks.push_back(domino_mask(tiling.rows[i]));
      data.cells.push_back(cells_of(tiling.rows[i]));
    } else {
      data.lengths.push_back(0);
      data.masks.push_back(0);
      data.cells.emplace_back();
    }
  }
  return data;
}

}  // namespace

std::vector<CellState> cells_of(const RowTiling& row) {
  std::vector<CellState> cells;
  for (Tile tile : row) {
    if (tile == Tile::Monomino) {
      cells.push_back(CellState::Monomino);
    } else {
      cells.push_back(CellState::DominoLeft);
      cells.push_back(CellState::DominoRight);
    }
  }
  return cells;
}

RowTiling fixed_tiles(const std::vector<CellState>& row) {
  RowTiling tiles;
  for (CellState c : row) {
    if (c == CellState::Monomino) tiles.push_back(Tile::Monomino);
    if (c == CellState::DominoLeft) tiles.push_back(Tile::Domino);
  }
  return tiles;
}

PartialTiling assemble_binomial(int n, const std::vector<NorthKind>& labels, const std::vector<RowTiling>& strips) {
  if (n < 0 || static_cast<int>(labels.size()) != n || static_cast<int>(strips.size()) != n) {
    throw InvalidArgument("assemble_binomial needs one label and one strip per row");
  }
  const int k = static_cast<int>(std::count(labels.begin(), labels.end(), NorthKind::NL));
  PartialTiling p;
  p.variant = PathVariant::binomial(n, k);
  p.shape = p.variant.shape();
  p.path.start_x = k;
  p.rows.resize(static_cast<std::size_t>(n));
  int nl_above = k;
  for (int i = 0; i < n; ++i) {
    const int len = n - 1 - i;
    if (labels[i] == NorthKind::NL) {
      --nl_above;
      p.path.steps.push_back(Step::W);
    }
    const int x = nl_above;
    p.path.steps.push_back(Step::N);
    p.path.labels.push_back(labels[i]);
    const RowTiling& strip = strips[i];
    const int width = covered_length(strip);
    const std::string where = " in row " + std::to_string(i + 1);
    if (x > len) throw InvalidArgument("path leaves the diagram" + where);
    auto& row = p.rows[i];
    row.assign(static_cast<std::size_t>(len), CellState::Blank);
    const auto cells = cells_of(strip);
    if (labels[i] == NorthKind::NI) {
      if (width != x) throw InvalidArgument("NI strip has length " + std::to_string(width) + ", expected " + std::to_string(x) + where);
      std::copy(cells.begin(), cells.end(), row.begin());
    } else {
      if (width != len - x) {
        throw InvalidArgument("NL strip has length " + std::to_string(width) + ", expected " + std::to_string(len - x) + where);
      }
      if (width > 0 && strip.front() != Tile::Domino) throw InvalidArgument("NL strip must begin with a domino" + where);
      std::copy(cells.begin(), cells.end(), row.begin() + x);
    }
  }
  return p;
}

std::vector<RowTiling> row_strips(const PartialTiling& partial) {
  std::vector<RowTiling> out;
  out.reserve(partial.rows.size());
  for (const auto& row : partial.rows) out.push_back(fixed_tiles(row));
  return out;
}

LatticePath path_from_tiling(const Tiling& tiling, const PathVariant& variant) {
  const RowData data = row_data(tiling, variant);
  return trace_path(variant, data.lengths, data.masks);
}

PartialTiling partial_from_tiling(const Tiling& tiling, const PathVariant& variant) {
  const RowData data = row_data(tiling, variant);
  PartialTiling p;
  p.shape = variant.shape();
  p.variant = variant;
  p.path = trace_path(variant, data.lengths, data.masks);
  std::vector<const std::vector<CellState>*> cells;
  for (const auto& c : data.cells) cells.push_back(&c);
  p.rows = fixed_rows(variant, p.path, cells, data.masks.empty() ? 0 : data.masks[0]);
  return p;
}

std::string PartialTiling::key() const { return encode(variant, path, rows); }

Poly2 partial_weight(const PartialTiling& partial) {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  for (const auto& row : partial.rows) {
    for (CellState c : row) {
      if (c == CellState::Monomino) ++a;
      if (c == CellState::DominoLeft) ++b;
    }
  }
  return Poly2::monomial(1, a, b);
}

namespace {

std::vector<int> blank_runs(const PartialTiling& partial) {
  std::vector<int> runs;
  for (const auto& row : partial.rows) {
    int run = 0;
    for (CellState c : row) {
      if (c == CellState::Blank) {
        ++run;
      } else if (run > 0) {
        runs.push_back(run);
        run = 0;
      }
    }
    if (run > 0) runs.push_back(run);
  }
  return runs;
}

}  // namespace

Poly2 blank_weight(const PartialTiling& partial) {
  Poly2 w = 1;
  for (int run : blank_runs(partial)) w *= lucas(static_cast<unsigned>(run + 1));
  return w;
}

mpz_class completion_count(const PartialTiling& partial) {
  mpz_class c = 1;
  mpz_class f;
  for (int run : blank_runs(partial)) {
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(run + 1));
    c *= f;
  }
  return c;
}

namespace {

struct BlockAccumulator {
  PartialTiling representative;
  std::uint64_t members = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> weights;
};

// Shared enumeration behind verify_block_partition and enumerate_partials.
std::vector<BlockAccumulator> group_tilings(const PathVariant& v, std::uint64_t& tiling_count,
                                            std::vector<std::string>* violations) {
  const Shape shape = v.shape();
  const int height = v.height();
  const int rows = shape.num_rows();

  struct RowChoice {
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<CellState>> cells;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
  };
  std::vector<RowChoice> choices(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    for (const auto& rt : row_tilings(shape.row_length(i))) {
      choices[i].masks.push_back(domino_mask(rt));
      choices[i].cells.push_back(cells_of(rt));
      std::uint32_t a = 0;
      std::uint32_t b = 0;
      for (Tile tile : rt) (tile == Tile::Monomino ? a : b)++;
      choices[i].counts.emplace_back(a, b);
    }
  }

  std::vector<int> lengths(static_cast<std::size_t>(height), 0);
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(height), 0);
  const std::vector<CellState> empty_row;
  std::vector<const std::vector<CellState>*> cells(static_cast<std::size_t>(height), &empty_row);
  for (int i = 0; i < rows; ++i) lengths[i] = shape.row_length(i);

  std::vector<std::size_t> index(static_cast<std::size_t>(rows), 0);
  std::unordered_map<std::string, std::size_t> lookup;
  std::vector<BlockAccumulator> blocks;
  tiling_count = 0;

  while (true) {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    for (int i = 0; i < rows; ++i) {
      masks[i] = choices[i].masks[index[i]];
      cells[i] = &choices[i].cells[index[i]];
      a += choices[i].counts[index[i]].first;
      b += choices[i].counts[index[i]].second;
    }
    ++tiling_count;
    LatticePath path = trace_path(v, lengths, masks);
    auto fixed = fixed_rows(v, path, cells, masks.empty() ? 0 : masks[0]);
    std::string key = encode(v, path, fixed);
    auto [it, inserted] = lookup.try_emplace(std::move(key), blocks.size());
    if (inserted) {
      BlockAccumulator acc;
      acc.representative.shape = shape;
      acc.representative.variant = v;
      acc.representative.path = std::move(path);
      acc.representative.rows = std::move(fixed);
      blocks.push_back(std::move(acc));
    }
    BlockAccumulator& block = blocks[it->second];
    if (!inserted && violations != nullptr) {
      // The tiling must agree with the block representative on every fixed cell.
      for (int i = 0; i < rows; ++i) {
        const auto& rep = block.representative.rows[i];
        const auto& mine = *cells[i];
        for (std::size_t j = 0; j < rep.size(); ++j) {
          if (rep[j] != CellState::Blank && rep[j] != mine[j]) {
            violations->push_back("tiling disagrees with its block representative in row " + std::to_string(i + 1));
          }
        }
      }
    }
    ++block.members;
    ++block.weights[{a, b}];

    int i = rows - 1;
    while (i >= 0 && index[i] + 1 == choices[i].masks.size()) {
      index[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++index[i];
  }
  return blocks;
}

}  // namespace

BlockReport verify_block_partition(const PathVariant& variant) {
  BlockReport report;
  report.variant = variant;
  auto blocks = group_tilings(variant, report.tiling_count, &report.violations);
  const Poly2 divisor = variant.divisor();
  const mpz_class divisor_count = poly_eval(divisor, 1, 1);
  // Row-1 blanks of Catalan and Fuss partials are constrained by the first step.
  const bool blanks_free =
      variant.kind == PathVariant::Kind::Binomial || variant.kind == PathVariant::Kind::DDivisible;
  std::uint64_t covered = 0;
  for (const auto& block : blocks) {
    const PartialTiling& rep = block.representative;
    covered += block.members;
    const std::string where = " (block " + rep.key() + ")";
    const mpz_class members(static_cast<unsigned long>(block.members));
    if (members != divisor_count) report.violations.push_back("block size differs from the divisor at s=t=1" + where);
    if (blanks_free && completion_count(rep) != members) {
      report.violations.push_back("block size differs from the number of completions" + where);
    }
    std::vector<Term> terms;
    for (const auto& [mono, c] : block.weights) {
      terms.push_back(Term{Monomial{mono.first, mono.second}, mpz_class(static_cast<unsigned long>(c))});
    }
    const Poly2 block_weight(std::move(terms));
    const Poly2 fixed = partial_weight(rep);
    try {
      if (poly_exact_div(block_weight, divisor) != fixed) {
        report.violations.push_back("block weight / divisor differs from the partial weight" + where);
      }
    } catch (const NotDivisible&) {
      report.violations.push_back("divisor does not divide the block weight" + where);
    }
    if (block_weight != divisor * fixed) {
      report.violations.push_back("block weight differs from divisor * partial weight" + where);
    }
    report.sum += fixed;
    report.partials.push_back(rep);
  }
  if (covered != report.tiling_count) report.violations.push_back("blocks do not cover the tiling set");
  report.expected = variant.expected_sum();
  if (report.sum != report.expected) {
    report.violations.push_back("sum of partial weights " + report.sum.to_string() + " differs from " +
                                report.expected.to_string());
  }
  return report;
}

std::vector<PartialTiling> enumerate_partials(const PathVariant& variant) {
  std::uint64_t count = 0;
  auto blocks = group_tilings(variant, count, nullptr);
  std::vector<PartialTiling> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.push_back(std::move(b.representative));
  return out;
}

Shape skew_numerator_shape(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("skew numerator shape needs n, d >= 1");
  const Shape outer = Shape::d_staircase(2 * n - 1, d);
  std::vector<int> rows = outer.outer();
  return Shape(rows, {(d - 1) * n});
}

bool verify_skew_numerator(int n, int d) {
  const Shape shape = skew_numerator_shape(n, d);
  const Poly2 expected = lucas(static_cast<unsigned>((d + 1) * n - d)) *
                         d_lucastorial(static_cast<unsigned>(2 * n - 2), static_cast<unsigned>(d));
  return shape_weight(shape) == expected;
}

}  // namespace lucaskit
