#pragma once

#include <string>
#include <vector>

#include "lucaskit/tiling.hpp"

namespace lucaskit {

/// Tiling of a k x (n-k) rectangle split by a north/east lattice path from
/// the southwest to the northeast corner. Rows northwest of the path carry
/// horizontal tiles; columns southeast of it carry vertical tiles, each
/// nonempty column starting with a domino at the bottom.
struct RectangleTiling {
  int k = 0;  // width, number of E steps
  int n = 0;  // k + height
  std::string path;  // over {N, E}
  std::vector<RowTiling> rows;     // bottom to top, one per N step
  std::vector<RowTiling> columns;  // left to right, one per E step, tiles bottom to top

  friend bool operator==(const RectangleTiling&, const RectangleTiling&) = default;
};

/// Requires a binomial partial tiling.
RectangleTiling to_rectangle_model(const PartialTiling& partial);

/// Inverse of to_rectangle_model. Throws MalformedModel when the input is not
/// in its image (bad lengths, or a column without a leading domino).
PartialTiling from_rectangle_model(const RectangleTiling& rect);

Poly2 rectangle_weight(const RectangleTiling& rect);

}  // namespace lucaskit
