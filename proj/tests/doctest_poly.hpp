#pragma once

#include <doctest.h>

#include "lucaskit/poly2.hpp"

namespace doctest {
template <>
struct StringMaker<lucaskit::Poly2> {
  static String convert(const lucaskit::Poly2& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
