#pragma once

#include <cstdint>
#include <stdexcept>

#include "lseg/model.hpp"

namespace lseg {

// Raised when no graph-preserving repair or rank assignment exists within
// the bounded search (typically collinear overlapping arms, which no amount
// of endpoint lengthening can separate).
class NormalizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Controls the integer perturbation scheme: coordinates are first multiplied
// by `scale` so original values sit on multiples of it, then free endpoints
// move by up to `max_step` < scale units, which can never reach another
// original coordinate. `max_fixes` 0 means proportional to the vertex count.
struct DesingularizePolicy {
  std::int64_t scale = 4;
  std::int64_t max_step = 3;
  int max_fixes = 0;
};

// Puts a raw rep into general position without changing its intersection
// graph: every arm gets positive length and no curve endpoint lies on
// another curve. Touches are resolved by lengthening the touching free end
// (the paper-style "lengthen a bit" made exact); each candidate move is
// committed only if the closed-curve graph is unchanged. Clean inputs are
// returned untouched. Throws NormalizeError when a touch cannot be cleared.
LRep desingularize(const LRep& raw, const DesingularizePolicy& policy = {});

// Raw rep -> canonical rep on the {1,...,2n} grid with the same
// intersection graph: desingularize, then reassign each axis's coordinates
// to their ranks (ties across vertices broken by vertex index, which is
// safe once the rep is in general position). Throws NormalizeError if the
// result's graph differs from the input's.
LRep normalize(const LRep& raw);

}  // namespace lseg
