#pragma once

#include <json.hpp>

#include "lucaskit/analysis.hpp"
#include "lucaskit/involution.hpp"
#include "lucaskit/poly2.hpp"
#include "lucaskit/rectangle.hpp"
#include "lucaskit/tiling.hpp"

namespace lucaskit {

using Json = nlohmann::ordered_json;

/// {"terms":[{"s":..,"t":..,"c":"<decimal>"}...]} in term order.
Json to_json(const Poly2& p);
Poly2 poly_from_json(const Json& j);

Json to_json(const Shape& shape);
Shape shape_from_json(const Json& j);

/// Rows of "M"/"D" tokens, bottom row first.
Json to_json(const Tiling& tiling);
Tiling tiling_from_json(const Json& j);

Json to_json(const PathVariant& v);
PathVariant variant_from_json(const Json& j);

/// Rows of "M", "D" and "." (one per blank cell), plus path, start and labels.
Json to_json(const PartialTiling& p);
PartialTiling partial_from_json(const Json& j);

Json to_json(const ExtendedTiling& e);
ExtendedTiling extended_from_json(const Json& j);

Json to_json(const RectangleTiling& r);
RectangleTiling rectangle_from_json(const Json& j);

Json to_json(const CoeffReport& r);

/// Throws InvalidArgument on malformed input.
Json parse_json(const std::string& text);

}  // namespace lucaskit
