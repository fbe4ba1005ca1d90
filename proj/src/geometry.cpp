#include "lseg/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace lseg {

// ---------------------------------------------------------------------------
// Sign of sum c_i * 2^(e_i).
//
// Scan the merged terms from the largest exponent down, keeping the partial
// sum v scaled to the current exponent. Once |v| strictly exceeds the sum of
// the remaining |c_j| the remaining terms cannot flip the sign (they all
// carry factors <= 1 at the current scale), so we can stop; gaps of 8+ bits
// decide immediately because |v| << gap >= 256 > 64 >= remaining. Everything
// stays in small integers, no big-number arithmetic.
// ---------------------------------------------------------------------------
int sign_of_pow2_sum(std::span<Pow2Term> terms) {
  constexpr std::size_t kMaxTerms = 40;
  assert(terms.size() <= kMaxTerms);

  std::sort(terms.begin(), terms.end(),
            [](const Pow2Term& a, const Pow2Term& b) { return a.exp > b.exp; });

  // merge equal exponents in place
  std::size_t m = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) continue;
    if (m > 0 && terms[m - 1].exp == terms[i].exp) {
      terms[m - 1].coeff += terms[i].coeff;
      if (terms[m - 1].coeff == 0) --m;
    } else {
      terms[m++] = terms[i];
    }
  }

  int suffix[kMaxTerms + 1];
  suffix[m] = 0;
  for (std::size_t i = m; i-- > 0;)
    suffix[i] = suffix[i + 1] + std::abs(terms[i].coeff);
  assert(m == 0 || suffix[0] <= 64);

  std::int64_t v = 0;
  std::int64_t prev_exp = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (v != 0) {
      const std::int64_t gap = prev_exp - terms[i].exp;
      if (gap >= 8) return v > 0 ? 1 : -1;
      v <<= gap;
      if (v > suffix[i] || -v > suffix[i]) return v > 0 ? 1 : -1;
    }
    v += terms[i].coeff;
    prev_exp = terms[i].exp;
  }
  return (v > 0) - (v < 0);
}

// ---------------------------------------------------------------------------
// Pow2Coord
// ---------------------------------------------------------------------------

Pow2Coord Pow2Coord::pow(std::int64_t e) {
  Pow2Coord c;
  c.has_hi_ = true;
  c.hi_ = e;
  return c;
}

Pow2Coord Pow2Coord::pow_minus_pow(std::int64_t e, std::int64_t f) {
  if (e == f) return {};
  Pow2Coord c;
  c.has_hi_ = true;
  c.hi_ = e;
  c.has_lo_ = true;
  c.lo_ = f;
  return c;
}

Pow2Coord Pow2Coord::big(BigCoord v) {
  Pow2Coord c;
  c.big_ = std::move(v);
  return c;
}

BigCoord Pow2Coord::to_big() const {
  if (big_) return *big_;
  BigCoord v = 0;
  if (has_hi_) {
    if (hi_ < 0) throw std::domain_error("negative exponent has no integer expansion");
    v += big_pow2(static_cast<std::uint64_t>(hi_));
  }
  if (has_lo_) {
    if (lo_ < 0) throw std::domain_error("negative exponent has no integer expansion");
    v -= big_pow2(static_cast<std::uint64_t>(lo_));
  }
  return v;
}

int Pow2Coord::append_terms(Pow2Term* out, int pos, int sign) const {
  assert(symbolic());
  if (has_hi_) out[pos++] = {hi_, sign};
  if (has_lo_) out[pos++] = {lo_, -sign};
  return pos;
}

bool Pow2Coord::operator==(const Pow2Coord& o) const {
  return compare_pow2(*this, o) == std::strong_ordering::equal;
}

std::strong_ordering compare_pow2(const Pow2Coord& x, const Pow2Coord& y) {
  if (x.symbolic() && y.symbolic()) {
    Pow2Term terms[4];
    int m = x.append_terms(terms, 0, +1);
    m = y.append_terms(terms, m, -1);
    const int s = sign_of_pow2_sum({terms, static_cast<std::size_t>(m)});
    return s <=> 0;
  }
  return cmp(x.to_big(), y.to_big()) <=> 0;
}

GridSegment Pow2Segment::to_grid() const {
  return GridSegment{id, {p.x.to_big(), p.y.to_big()}, {q.x.to_big(), q.y.to_big()}};
}

// ---------------------------------------------------------------------------
// L-curve predicates
// ---------------------------------------------------------------------------

bool l_intersects(const LShape& u, const LShape& v) {
  const bool x_collision = u.l == v.l || u.l == v.r || u.r == v.l || u.r == v.r;
  const bool y_collision = u.b == v.b || u.b == v.t || u.t == v.b || u.t == v.t;
  if (x_collision || y_collision)
    throw std::invalid_argument("coordinate collision between shapes " + u.id +
                                " and " + v.id + " (rep is not canonical)");

  // With all per-axis coordinates distinct, the only way two rotated Ls can
  // meet is a vertical arm strictly crossing a horizontal arm.
  const auto crosses = [](const LShape& a, const LShape& h) {
    const std::int64_t x = a.vertical_x();
    return h.l < x && x < h.r && a.b < h.t && h.t < a.t;
  };
  return crosses(u, v) || crosses(v, u);
}

bool l_intersects_raw(const LShape& u, const LShape& v) {
  const auto overlap = [](std::int64_t a1, std::int64_t a2, std::int64_t b1,
                          std::int64_t b2) {
    return std::max(a1, b1) <= std::min(a2, b2);
  };
  // horizontal arms on the same line
  if (u.t == v.t && overlap(u.l, u.r, v.l, v.r)) return true;
  // vertical arms on the same line
  if (u.vertical_x() == v.vertical_x() && overlap(u.b, u.t, v.b, v.t))
    return true;
  // vertical of one through/touching horizontal of the other
  const auto meets = [](const LShape& a, const LShape& h) {
    const std::int64_t x = a.vertical_x();
    return h.l <= x && x <= h.r && a.b <= h.t && h.t <= a.t;
  };
  return meets(u, v) || meets(v, u);
}

// ---------------------------------------------------------------------------
// Segment predicates
// ---------------------------------------------------------------------------

namespace {

int sgn_big(const BigCoord& v) { return sgn(v); }

int orient_big(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  const BigCoord cross =
      (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn_big(cross);
}

// c inside the closed bounding box of a,b (caller established collinearity)
bool in_box_big(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  const BigCoord& xmin = a.x <= b.x ? a.x : b.x;
  const BigCoord& xmax = a.x <= b.x ? b.x : a.x;
  const BigCoord& ymin = a.y <= b.y ? a.y : b.y;
  const BigCoord& ymax = a.y <= b.y ? b.y : a.y;
  return xmin <= c.x && c.x <= xmax && ymin <= c.y && c.y <= ymax;
}

bool all_symbolic(const Pow2Point& a, const Pow2Point& b, const Pow2Point& c) {
  return a.x.symbolic() && a.y.symbolic() && b.x.symbolic() &&
         b.y.symbolic() && c.x.symbolic() && c.y.symbolic();
}

int orient_pow2(const Pow2Point& a, const Pow2Point& b, const Pow2Point& c) {
  if (!all_symbolic(a, b, c)) {
    return orient_big(GridPoint{a.x.to_big(), a.y.to_big()},
                      GridPoint{b.x.to_big(), b.y.to_big()},
                      GridPoint{c.x.to_big(), c.y.to_big()});
  }
  // factors of (b.x-a.x)(c.y-a.y) - (b.y-a.y)(c.x-a.x), at most 4 terms each
  Pow2Term f1[4], f2[4], f3[4], f4[4];
  const int n1 = a.x.append_terms(f1, b.x.append_terms(f1, 0, +1), -1);
  const int n2 = a.y.append_terms(f2, c.y.append_terms(f2, 0, +1), -1);
  const int n3 = a.y.append_terms(f3, b.y.append_terms(f3, 0, +1), -1);
  const int n4 = a.x.append_terms(f4, c.x.append_terms(f4, 0, +1), -1);

  Pow2Term prod[32];
  std::size_t m = 0;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      prod[m++] = {f1[i].exp + f2[j].exp, f1[i].coeff * f2[j].coeff};
  for (int i = 0; i < n3; ++i)
    for (int j = 0; j < n4; ++j)
      prod[m++] = {f3[i].exp + f4[j].exp, -f3[i].coeff * f4[j].coeff};
  return sign_of_pow2_sum({prod, m});
}

bool in_box_pow2(const Pow2Point& a, const Pow2Point& b, const Pow2Point& c) {
  const auto le = [](const Pow2Coord& u, const Pow2Coord& v) {
    return compare_pow2(u, v) != std::strong_ordering::greater;
  };
  const Pow2Coord& xmin = le(a.x, b.x) ? a.x : b.x;
  const Pow2Coord& xmax = le(a.x, b.x) ? b.x : a.x;
  const Pow2Coord& ymin = le(a.y, b.y) ? a.y : b.y;
  const Pow2Coord& ymax = le(a.y, b.y) ? b.y : a.y;
  return le(xmin, c.x) && le(c.x, xmax) && le(ymin, c.y) && le(c.y, ymax);
}

// Closed-segment test via orientation signs: a proper crossing needs strict
// sign changes on both segments; otherwise any endpoint collinear with and
// inside the other segment's box is a touch.
template <class Pt, class Orient, class InBox>
bool closed_intersect(const Pt& p1, const Pt& q1, const Pt& p2, const Pt& q2,
                      Orient orient, InBox in_box) {
  const int d1 = orient(p2, q2, p1);
  const int d2 = orient(p2, q2, q1);
  const int d3 = orient(p1, q1, p2);
  const int d4 = orient(p1, q1, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && in_box(p2, q2, p1)) return true;
  if (d2 == 0 && in_box(p2, q2, q1)) return true;
  if (d3 == 0 && in_box(p1, q1, p2)) return true;
  if (d4 == 0 && in_box(p1, q1, q2)) return true;
  return false;
}

}  // namespace

bool seg_intersects(const GridSegment& s1, const GridSegment& s2) {
  return closed_intersect(s1.p, s1.q, s2.p, s2.q, orient_big, in_box_big);
}

bool seg_intersects(const Pow2Segment& s1, const Pow2Segment& s2) {
  return closed_intersect(s1.p, s1.q, s2.p, s2.q, orient_pow2, in_box_pow2);
}

namespace {

// t such that c = p + t * (q - p), checked exactly; segment must be proper.
bool point_on_segment_solve(const GridPoint& c, const GridSegment& s) {
  const BigCoord dx = s.q.x - s.p.x;
  const BigCoord dy = s.q.y - s.p.y;
  mpq_class t;
  if (dx != 0) {
    t = mpq_class(c.x - s.p.x, dx);
    t.canonicalize();
    if (mpq_class(s.p.y) + t * mpq_class(dy) != mpq_class(c.y)) return false;
  } else {
    if (c.x != s.p.x) return false;
    t = mpq_class(c.y - s.p.y, dy);
    t.canonicalize();
  }
  return t >= 0 && t <= 1;
}

}  // namespace

bool seg_intersects_solve(const GridSegment& s1, const GridSegment& s2) {
  const BigCoord d1x = s1.q.x - s1.p.x, d1y = s1.q.y - s1.p.y;
  const BigCoord d2x = s2.q.x - s2.p.x, d2y = s2.q.y - s2.p.y;
  const bool deg1 = d1x == 0 && d1y == 0;
  const bool deg2 = d2x == 0 && d2y == 0;
  if (deg1 && deg2) return s1.p == s2.p;
  if (deg1) return point_on_segment_solve(s1.p, s2);
  if (deg2) return point_on_segment_solve(s2.p, s1);

  const BigCoord wx = s2.p.x - s1.p.x, wy = s2.p.y - s1.p.y;
  const BigCoord det = d1x * d2y - d1y * d2x;
  if (det != 0) {
    // p1 + s*(q1-p1) = p2 + t*(q2-p2), Cramer on the 2x2 system
    mpq_class s(wx * d2y - wy * d2x, det);
    s.canonicalize();
    mpq_class t(wx * d1y - wy * d1x, det);
    t.canonicalize();
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
  }

  // parallel lines: distinct ones never meet
  if (wx * d1y - wy * d1x != 0) return false;

  // collinear: s2's endpoints projected onto s1's parameter line
  const BigCoord len2 = d1x * d1x + d1y * d1y;
  mpq_class ta(wx * d1x + wy * d1y, len2);
  ta.canonicalize();
  mpq_class tb((s2.q.x - s1.p.x) * d1x + (s2.q.y - s1.p.y) * d1y, len2);
  tb.canonicalize();
  if (ta > tb) std::swap(ta, tb);
  return ta <= 1 && tb >= 0;
}

}  // namespace lseg
