#pragma once

#include <optional>
#include <string>

#include "lucaskit/tiling.hpp"

namespace lucaskit {

/// Drawings follow the usual figure conventions: a dot at each tile center,
/// dominoes as two joined dots, the lattice path thick. Blank cells are empty.
std::string render_ascii(const Shape& shape, const Tiling& tiling, const std::optional<LatticePath>& path = {});
std::string render_ascii(const PartialTiling& partial);

std::string render_svg(const Shape& shape, const Tiling& tiling, const std::optional<LatticePath>& path = {});
std::string render_svg(const PartialTiling& partial);

}  // namespace lucaskit
