#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lucaskit/tiling.hpp"

namespace lucaskit {

/// A fully tiled one-row strip; its length is covered_length(tiles).
using Strip = RowTiling;

Strip strip_concat(const Strip& r, const Strip& s);
/// First c cells. Throws BrokenDomino if the cut splits a domino and
/// InvalidArgument if c is out of range.
Strip strip_first(const Strip& s, int c);
/// Last c cells, same errors as strip_first.
Strip strip_last(const Strip& s, int c);
Strip strip_reverse(const Strip& s);

/// NI iff an N step from (x,0) stays on the strip (0 <= x <= length) and
/// crosses no domino.
NorthKind classify_point(const Strip& s, int x);
/// Same test on the bottom row of a binomial partial tiling (row length n-1);
/// only fixed dominoes block.
NorthKind classify_point(const PartialTiling& b, int x);

struct ExtendedType {
  int n = 0;
  int k = 0;
  int r = 0;
  friend bool operator==(const ExtendedType&, const ExtendedType&) = default;
  friend auto operator<=>(const ExtendedType&, const ExtendedType&) = default;
};

/// A binomial partial tiling B of delta_n with path from (k,0), plus strips
/// S_1..S_r with |S_i| = k - i.
struct ExtendedTiling {
  PartialTiling b;
  std::vector<Strip> strips;

  /// Throws InvalidArgument when the strips do not match B.
  ExtendedType type() const;
  friend bool operator==(const ExtendedTiling&, const ExtendedTiling&) = default;
};

/// wt(B) times the weights of all strips.
Poly2 extended_weight(const ExtendedTiling& e);

/// The involution, of type (n,k,r) -> (n,n-k+r,r). When trace is given it
/// receives one case letter (a-d) per recursion level, outermost first.
/// Throws Malformed, carrying the trace, if a cut breaks a domino or a result
/// does not assemble.
ExtendedTiling iota(const ExtendedTiling& e, std::string* trace = nullptr);

/// Every extended tiling of the type, B in first-seen partial order and
/// strips in row_tilings order.
std::vector<ExtendedTiling> enumerate_extended(int n, int k, int r);

struct InvolutionReport {
  ExtendedType type;
  ExtendedType image_type;
  std::uint64_t domain_size = 0;
  std::uint64_t image_class_size = 0;
  std::map<char, std::uint64_t> case_counts;  // top-level case of each input
  Poly2 domain_sum;
  Poly2 image_sum;
  Poly2 lhs;  // {k}...{k-r+1} {n brace k}
  Poly2 rhs;  // {n-k+r}...{n-k+1} {n brace n-k+r}
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the type contract, iota^2 = id, weight preservation,
/// bijectivity onto the image class, and both sides of the symmetry identity.
InvolutionReport verify_involution(int n, int k, int r);

/// A worked instance of type (7,5,2), with its
/// expected image and case trace "dcbacdd".
ExtendedTiling example_752();
ExtendedTiling example_752_image();

}  // namespace lucaskit
