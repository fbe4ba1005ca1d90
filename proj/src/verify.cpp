#include "lseg/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace lseg {

namespace {

std::vector<std::string> shape_ids(const LRep& rep) {
  std::vector<std::string> ids;
  ids.reserve(rep.shapes.size());
  for (const LShape& s : rep.shapes) ids.push_back(s.id);
  return ids;
}

void require_unique(const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second)
      throw std::invalid_argument("duplicate vertex id " + id);
}

template <class Item, class Pred>
IntersectionGraph pairwise_graph(std::vector<std::string> ids,
                                 const std::vector<Item>& items, Pred pred) {
  require_unique(ids);
  IntersectionGraph g(std::move(ids));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      g.set_edge(i, j, pred(items[i], items[j]));
  return g;
}

}  // namespace

IntersectionGraph extract_graph_lrep(const LRep& rep) {
  const auto violations = validate_lrep(rep);
  if (!violations.empty())
    throw std::invalid_argument("extract_graph_lrep: invalid rep: " +
                                violations.front());
  if (!rep.canonical)
    throw std::invalid_argument("extract_graph_lrep requires a canonical rep");
  return pairwise_graph(shape_ids(rep), rep.shapes,
                        [](const LShape& u, const LShape& v) {
                          return l_intersects(u, v);
                        });
}

IntersectionGraph extract_graph_lrep_raw(const LRep& rep) {
  for (const LShape& s : rep.shapes)
    if (s.l > s.r || s.b > s.t)
      throw std::invalid_argument("inverted box at " + s.id);
  return pairwise_graph(shape_ids(rep), rep.shapes,
                        [](const LShape& u, const LShape& v) {
                          return l_intersects_raw(u, v);
                        });
}

IntersectionGraph extract_graph_segments(const std::vector<GridSegment>& segs) {
  std::vector<std::string> ids;
  ids.reserve(segs.size());
  for (const auto& s : segs) ids.push_back(s.id);
  return pairwise_graph(std::move(ids), segs,
                        [](const GridSegment& a, const GridSegment& b) {
                          return seg_intersects(a, b);
                        });
}

IntersectionGraph extract_graph_segments(const std::vector<Pow2Segment>& segs) {
  std::vector<std::string> ids;
  ids.reserve(segs.size());
  for (const auto& s : segs) ids.push_back(s.id);
  return pairwise_graph(std::move(ids), segs,
                        [](const Pow2Segment& a, const Pow2Segment& b) {
                          return seg_intersects(a, b);
                        });
}

GraphDiff graphs_equal(const IntersectionGraph& g1, const IntersectionGraph& g2) {
  if (g1.size() != g2.size())
    throw std::invalid_argument("vertex id sets differ in size");

  std::map<std::string, std::size_t> index2;
  for (std::size_t j = 0; j < g2.size(); ++j) index2[g2.ids()[j]] = j;

  std::vector<std::size_t> remap(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    auto it = index2.find(g1.ids()[i]);
    if (it == index2.end())
      throw std::invalid_argument("vertex id " + g1.ids()[i] +
                                  " missing from second graph");
    remap[i] = it->second;
  }

  GraphDiff diff;
  diff.equal = true;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = i + 1; j < g1.size(); ++j) {
      const bool a = g1.edge(i, j);
      const bool b = g2.edge(remap[i], remap[j]);
      if (a != b) {
        diff.equal = false;
        diff.mismatches.push_back({g1.ids()[i], g1.ids()[j], a, b});
      }
    }
  }
  return diff;
}

ResolutionStats resolution_stats(const std::vector<GridSegment>& segs) {
  ResolutionStats st;
  st.width = 0;
  st.height = 0;
  st.max_coord = 0;
  for (const auto& s : segs) {
    for (const GridPoint* p : {&s.p, &s.q}) {
      if (p->x > st.width) st.width = p->x;
      if (p->y > st.height) st.height = p->y;
    }
  }
  st.max_coord = st.width > st.height ? st.width : st.height;
  st.bits = bit_length(st.max_coord);
  return st;
}

}  // namespace lseg
