#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lseg {

// Exact unbounded signed integer. Segment endpoints reach 2^(2n-1) and
// (2n)^(2n), far past any machine word; all arithmetic on coordinates is
// exact, nothing in this library ever rounds.
using BigCoord = mpz_class;

// 2^e as a BigCoord.
BigCoord big_pow2(std::uint64_t e);

// base^e as a BigCoord.
BigCoord big_pow(std::uint64_t base, std::uint64_t e);

// Number of bits of |v|; 0 for v == 0.
std::size_t bit_length(const BigCoord& v);

// Which vertical side of the bounding box the curve includes. TopRight is
// the 180-degree rotated L (top side + right side of its box), TopLeft its
// horizontal mirror (top side + left side).
enum class Orientation { TopRight, TopLeft };

// One vertex's rotated L-curve: bounding box [l,r] x [b,t] plus orientation.
// The curve is the top side of the box together with one vertical side; the
// horizontal arm lies at y = t, the vertical arm at x = vertical_x().
struct LShape {
  std::string id;
  std::int64_t l = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  Orientation orient = Orientation::TopRight;

  std::int64_t vertical_x() const {
    return orient == Orientation::TopRight ? r : l;
  }

  bool operator==(const LShape&) const = default;
};

// A full L-representation. `canonical` asserts that per axis the 2n endpoint
// coordinates are exactly {1,...,2n}, all distinct.
struct LRep {
  std::int64_t n = 0;
  std::vector<LShape> shapes;
  bool canonical = false;

  // True when every shape is TopRight.
  bool pure() const;

  bool operator==(const LRep&) const = default;
};

struct GridPoint {
  BigCoord x;
  BigCoord y;

  bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
};

// Closed segment with exact endpoints. p and q may coincide (a point
// segment; the n = 1 pow2 output degenerates this way).
struct GridSegment {
  std::string id;
  GridPoint p;
  GridPoint q;

  bool degenerate() const { return p == q; }
};

// Vertex-labelled adjacency matrix, symmetric with a false diagonal.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }

  void set_edge(std::size_t i, std::size_t j, bool on);
  bool edge(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::uint8_t> adj_;
};

// True when the coordinate multisets match the canonical grid exactly:
// x-values {l,r : v} == {1,...,2n} and likewise for y.
bool coordinates_canonical(const std::vector<LShape>& shapes);

// Diagnostic: every violated invariant with the offending vertex id(s);
// empty exactly on reps every downstream operation accepts. The canonical
// flag is checked against the actual coordinates in both directions.
std::vector<std::string> validate_lrep(const LRep& rep);

}  // namespace lseg
