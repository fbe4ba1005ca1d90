#include "lseg/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace lseg {

namespace {

void require_canonical(const LRep& rep, const char* op) {
  if (!rep.canonical)
    throw std::invalid_argument(std::string(op) + " requires a canonical rep");
  const auto violations = validate_lrep(rep);
  if (!violations.empty())
    throw std::invalid_argument(std::string(op) + ": invalid rep: " +
                                violations.front());
}

}  // namespace

Pow2Result transform_pow2(const LRep& rep) {
  require_canonical(rep, "transform_pow2");
  if (!rep.pure())
    throw UnsupportedInputError(
        "transform_pow2 handles only TopRight shapes; mixed-orientation reps "
        "need the mixed construction");

  std::int64_t s = 0;
  for (const LShape& v : rep.shapes) {
    s = std::max(s, v.r - v.l - v.t);
    s = std::max(s, v.t - v.b - v.r);
  }

  Pow2Result res;
  res.dilation_exponent = s;
  res.claimed_bound = big_pow2(static_cast<std::uint64_t>(2 * rep.n - 1 + s));
  res.achieved_max_coord = 0;
  res.segments.reserve(rep.shapes.size());
  res.symbolic.reserve(rep.shapes.size());

  for (const LShape& v : rep.shapes) {
    Pow2Segment ps;
    ps.id = v.id;
    ps.p.x = Pow2Coord::pow(v.l + s);
    ps.p.y = Pow2Coord::pow_minus_pow(v.t + s, v.t - (v.r - v.l) + s);
    ps.q.x = Pow2Coord::pow_minus_pow(v.r + s, v.r - (v.t - v.b) + s);
    ps.q.y = Pow2Coord::pow(v.b + s);

    GridSegment gs = ps.to_grid();
    for (const BigCoord* c : {&gs.p.x, &gs.p.y, &gs.q.x, &gs.q.y})
      if (*c > res.achieved_max_coord) res.achieved_max_coord = *c;

    res.symbolic.push_back(std::move(ps));
    res.segments.push_back(std::move(gs));
  }
  return res;
}

std::vector<GridSegment> transform_mixed(const LRep& rep) {
  require_canonical(rep, "transform_mixed");

  const std::uint64_t base = static_cast<std::uint64_t>(2 * rep.n);
  std::vector<GridSegment> out;
  out.reserve(rep.shapes.size());
  for (const LShape& v : rep.shapes) {
    BigCoord y_b = big_pow(base, static_cast<std::uint64_t>(v.b));
    BigCoord y_t = big_pow(base, static_cast<std::uint64_t>(v.t));
    if (v.orient == Orientation::TopRight) {
      out.push_back({v.id, {BigCoord(v.l), std::move(y_t)},
                     {BigCoord(v.r), std::move(y_b)}});
    } else {
      out.push_back({v.id, {BigCoord(v.l), std::move(y_b)},
                     {BigCoord(v.r), std::move(y_t)}});
    }
  }
  return out;
}

}  // namespace lseg
