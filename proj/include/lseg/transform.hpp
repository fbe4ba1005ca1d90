#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lseg/geometry.hpp"
#include "lseg/model.hpp"

namespace lseg {

// Raised when an input is valid but the requested construction does not
// support it (pow2 on a rep containing TopLeft shapes).
class UnsupportedInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output of the power-of-two construction. `segments` and `symbolic` hold
// the same geometry; the symbolic form keeps coordinates as 2^e - 2^f so
// pair predicates can compare exponents instead of multi-kilobit integers.
struct Pow2Result {
  std::vector<GridSegment> segments;
  std::vector<Pow2Segment> symbolic;
  std::int64_t dilation_exponent = 0;  // s; 0 reproduces the 4^n grid bound
  BigCoord claimed_bound;              // 2^(2n-1+s)
  BigCoord achieved_max_coord;
};

// Canonical pure rep -> segment representation on the power-of-two grid.
// Vertex (l,b,r,t) maps to the clip of the diagonal from (0,2^(t+s)) to
// (2^(r+s),0) against x >= 2^(l+s), y >= 2^(b+s), giving endpoints
// (2^(l+s), 2^(t+s)-2^(t-(r-l)+s)) and (2^(r+s)-2^(r-(t-b)+s), 2^(b+s)).
// The dilation exponent s = max(0, max(r-l-t), max(t-b-r)) is the smallest
// uniform power-of-two scaling that keeps every exponent nonnegative; with
// s = 0 the construction needs no repair and all coordinates lie in
// [1, 2^(2n-1)]. Scaling is graph-preserving, so the represented graph
// always equals the input graph.
Pow2Result transform_pow2(const LRep& rep);

// Canonical rep (mixed orientations allowed) -> segment representation of
// width 2n and height (2n)^(2n): vertex (l,b,r,t) maps to a diagonal of the
// rectangle [l,r] x [(2n)^b,(2n)^t], downward for TopRight and upward for
// TopLeft.
std::vector<GridSegment> transform_mixed(const LRep& rep);

}  // namespace lseg
