#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lseg/geometry.hpp"
#include "lseg/model.hpp"

namespace lseg {

// Adjacency from a canonical L-representation: edge iff the curves meet.
// Throws std::invalid_argument when the rep fails validation.
IntersectionGraph extract_graph_lrep(const LRep& rep);

// Adjacency under closed-curve semantics for arbitrary integer coordinates
// (touching counts, degenerate arms allowed). Normalization uses this to
// check graph preservation against raw inputs.
IntersectionGraph extract_graph_lrep_raw(const LRep& rep);

// Adjacency from segments: edge iff the closed segments share a point.
IntersectionGraph extract_graph_segments(const std::vector<GridSegment>& segs);

// Same, on exponent-form segments (the fast path for pow2 outputs).
IntersectionGraph extract_graph_segments(const std::vector<Pow2Segment>& segs);

struct EdgeDiff {
  std::string u;
  std::string v;
  bool in_first = false;
  bool in_second = false;
};

struct GraphDiff {
  bool equal = false;
  std::vector<EdgeDiff> mismatches;
};

// Labelled equality under id alignment; vertex order is irrelevant.
// Throws std::invalid_argument when the id sets differ.
GraphDiff graphs_equal(const IntersectionGraph& g1, const IntersectionGraph& g2);

// Extents of the grid [0,width] x [0,height] supporting all endpoints.
// bits is the bit-length of the largest coordinate; past n = 40 or so that
// is the only printable size measure.
struct ResolutionStats {
  BigCoord width;
  BigCoord height;
  BigCoord max_coord;
  std::size_t bits = 0;
};

ResolutionStats resolution_stats(const std::vector<GridSegment>& segs);

}  // namespace lseg
