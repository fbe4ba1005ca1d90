#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lseg/model.hpp"

namespace lseg {

// One addend of a sum of signed powers of two.
struct Pow2Term {
  std::int64_t exp = 0;
  int coeff = 0;
};

// Exact sign of sum coeff_i * 2^(exp_i). Runs in O(k log k) for k terms,
// independent of the exponent magnitudes. Requires sum |coeff_i| <= 64.
int sign_of_pow2_sum(std::span<Pow2Term> terms);

// Symbolic coordinate (a ? 2^e : 0) - (c ? 2^f : 0) with a,c in {0,1},
// plus a fallback holding a plain BigCoord for values not of that shape.
// The pow2 construction emits only such values, which makes comparisons
// O(1) instead of O(bits): exponents reach ~4n, so the expansions would be
// multi-kilobyte integers.
class Pow2Coord {
 public:
  Pow2Coord() = default;  // zero

  static Pow2Coord zero() { return {}; }
  static Pow2Coord pow(std::int64_t e);
  static Pow2Coord pow_minus_pow(std::int64_t e, std::int64_t f);  // 2^e - 2^f
  static Pow2Coord big(BigCoord v);

  bool symbolic() const { return !big_.has_value(); }

  // Exact integer this value denotes.
  BigCoord to_big() const;

  // Appends sign * (this value) as symbolic terms; only valid on symbolic
  // values. `out` must have room for two more terms.
  int append_terms(Pow2Term* out, int pos, int sign) const;

  bool operator==(const Pow2Coord& o) const;

 private:
  bool has_hi_ = false;
  bool has_lo_ = false;
  std::int64_t hi_ = 0;
  std::int64_t lo_ = 0;
  std::optional<BigCoord> big_;
};

// Ordering of the denoted integers; exponent-aware on symbolic operands,
// BigCoord expansion otherwise. The two routes are interchangeable.
std::strong_ordering compare_pow2(const Pow2Coord& x, const Pow2Coord& y);

struct Pow2Point {
  Pow2Coord x;
  Pow2Coord y;
};

// A grid segment whose endpooint coordinates are kept in exponent form.
struct Pow2Segment {
  std::string id;
  Pow2Point p;
  Pow2Point q;

  GridSegment to_grid() const;
};

// Do two rotated L-curves from one canonical rep share a point? Under
// canonical distinctness this is: the vertical arm of one strictly crosses
// the horizontal arm of the other. Throws std::invalid_argument when the
// two shapes collide on a coordinate (non-canonical pair).
bool l_intersects(const LShape& u, const LShape& v);

// Closed-curve intersection for arbitrary integer coordinates; touching
// counts, arms may be degenerate. Used on raw inputs before normalization.
bool l_intersects_raw(const LShape& u, const LShape& v);

// Do the closed segments share at least one point? Exact, via orientation
// sign tests plus collinear-overlap handling; degenerate segments allowed.
bool seg_intersects(const GridSegment& s1, const GridSegment& s2);

// Same contract on exponent-form segments; falls back to BigCoord whenever
// an operand is not symbolic.
bool seg_intersects(const Pow2Segment& s1, const Pow2Segment& s2);

// Independent oracle with the same contract as seg_intersects: solves the
// 2x2 linear system in exact rationals and checks both parameters lie in
// [0,1]. Used only for cross-checking, never on the production path.
bool seg_intersects_solve(const GridSegment& s1, const GridSegment& s2);

}  // namespace lseg
