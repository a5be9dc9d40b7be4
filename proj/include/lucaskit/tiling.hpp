#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lucaskit/poly2.hpp"

namespace lucaskit {

enum class Tile : std::uint8_t { Monomino = 1, Domino = 2 };

using RowTiling = std::vector<Tile>;

/// Number of cells covered by a tile sequence.
int covered_length(const RowTiling& row);

/// Straight or skew Young diagram in French notation. Row i (0-based from
/// the bottom) occupies columns inner[i]+1 .. outer[i].
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> outer, std::vector<int> inner = {});

  /// delta_n = (n-1, ..., 1).
  static Shape staircase(int n);
  /// delta_{n:d} = (nd-1, (n-1)d-1, ..., d-1), zero parts dropped.
  static Shape d_staircase(int n, int d);

  const std::vector<int>& outer() const { return outer_; }
  const std::vector<int>& inner() const { return inner_; }
  bool is_skew() const;
  int num_rows() const { return static_cast<int>(outer_.size()); }
  int row_begin(int i) const { return i < static_cast<int>(inner_.size()) ? inner_[i] : 0; }
  int row_end(int i) const { return i < num_rows() ? outer_[i] : 0; }
  /// Cells in row i; rows above the diagram have length 0.
  int row_length(int i) const { return row_end(i) - row_begin(i); }

  std::string to_string() const;
  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> outer_;
  std::vector<int> inner_;
};

/// Monomino/domino tiling of every row of a shape.
struct Tiling {
  std::vector<RowTiling> rows;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// All tilings of a row of the given length, monomino-first lexicographic.
const std::vector<RowTiling>& row_tilings(int length);

std::vector<Tiling> enumerate_tilings(const Shape& shape);

/// Visits every tiling in the order of enumerate_tilings without storing them.
void for_each_tiling(const Shape& shape, const std::function<void(const Tiling&)>& visit);

/// s^(monominoes) t^(dominoes).
Poly2 tiling_weight(const Tiling& tiling);
Poly2 row_weight(const RowTiling& row);

/// Sum of tiling_weight over all tilings of the shape.
Poly2 shape_weight(const Shape& shape);

enum class Step : std::uint8_t { N, W };
enum class NorthKind : std::uint8_t { NI, NL };

struct NorthStep {
  int x = 0;
  NorthKind kind = NorthKind::NI;
  friend bool operator==(const NorthStep&, const NorthStep&) = default;
};

struct LatticePath {
  int start_x = 0;
  int start_y = 0;
  std::vector<Step> steps;
  /// One label per N step, in order.
  std::vector<NorthKind> labels;

  std::string word() const;
  /// x-coordinate and label of each N step; the i-th N step crosses row i.
  std::vector<NorthStep> north_steps() const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Which block partition a lattice path induces.
struct PathVariant {
  enum class Kind : std::uint8_t { Binomial, Catalan, FussCatalan, DDivisible };

  Kind kind = Kind::Binomial;
  int n = 0;
  int k = 0;  // Binomial/DDivisible: lower index; FussCatalan: Fuss parameter
  int d = 1;

  static PathVariant binomial(int n, int k);
  static PathVariant catalan(int n);
  static PathVariant fuss_catalan(int n, int k);
  static PathVariant d_divisible(int n, int k, int d);

  Shape shape() const;
  int start_x() const;
  /// Number of N steps; the path ends at (0, height()).
  int height() const;
  /// Product of Lucas factors dividing the weight of every block.
  Poly2 divisor() const;
  /// The Lucas analogue that the partial-tiling weights sum to.
  Poly2 expected_sum() const;
  std::string name() const;
  friend bool operator==(const PathVariant&, const PathVariant&) = default;
};

enum class CellState : std::uint8_t { Blank, Monomino, DominoLeft, DominoRight };

/// Block representative: fixed cells agree with every tiling of the block,
/// blank cells vary freely.
struct PartialTiling {
  Shape shape;
  PathVariant variant;
  LatticePath path;
  /// One entry per N step of the path (rows above the diagram are empty).
  std::vector<std::vector<CellState>> rows;

  /// Canonical serialization; equal keys mean equal blocks.
  std::string key() const;
  friend bool operator==(const PartialTiling&, const PartialTiling&) = default;
};

LatticePath path_from_tiling(const Tiling& tiling, const PathVariant& variant);
PartialTiling partial_from_tiling(const Tiling& tiling, const PathVariant& variant);

/// s^a t^b over fixed tiles only.
Poly2 partial_weight(const PartialTiling& partial);

/// Product of {len+1} over maximal blank runs: the weight of all fillings.
Poly2 blank_weight(const PartialTiling& partial);

/// Product of Fibonacci counts of blank runs: the block size for binomial and
/// d-divisible partials, whose blank cells are unconstrained.
mpz_class completion_count(const PartialTiling& partial);

/// Fixed tiles of one row in left-to-right order (blank cells skipped).
RowTiling fixed_tiles(const std::vector<CellState>& row);

std::vector<CellState> cells_of(const RowTiling& row);

/// Binomial partial tiling of delta_n rebuilt from its row labels and fixed
/// strips (row 1 first). The N step of row i sits at x = number of NL rows
/// above it; an NI strip fills columns 1..x, an NL strip columns x+1..n-i and
/// must begin with a domino when nonempty. Throws InvalidArgument otherwise.
PartialTiling assemble_binomial(int n, const std::vector<NorthKind>& labels, const std::vector<RowTiling>& strips);

/// Fixed strip of every row, in row order.
std::vector<RowTiling> row_strips(const PartialTiling& partial);

struct BlockReport {
  PathVariant variant;
  std::uint64_t tiling_count = 0;
  std::vector<PartialTiling> partials;
  Poly2 sum;
  Poly2 expected;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty() && sum == expected; }
};

/// Groups all tilings of the variant's shape by their partial tiling and
/// checks partition, divisibility, per-block weight and the weight sum.
BlockReport verify_block_partition(const PathVariant& variant);

/// Distinct partial tilings of the variant, in first-seen enumeration order.
std::vector<PartialTiling> enumerate_partials(const PathVariant& variant);

/// Weight of the skew shape delta_{2n-1:d}/((d-1)n) equals
/// {(d+1)n-d} * {2n-2:d}!.
bool verify_skew_numerator(int n, int d);
Shape skew_numerator_shape(int n, int d);

}  // namespace lucaskit
