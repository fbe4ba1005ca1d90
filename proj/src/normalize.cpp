#include "lseg/normalize.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "lseg/geometry.hpp"
#include "lseg/verify.hpp"

namespace lseg {

namespace {

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 58;

void basic_checks(const LRep& rep, std::int64_t scale) {
  if (rep.n != static_cast<std::int64_t>(rep.shapes.size()))
    throw std::invalid_argument("vertex count mismatch");
  std::set<std::string> ids;
  for (const LShape& s : rep.shapes) {
    if (!ids.insert(s.id).second)
      throw std::invalid_argument("duplicate id " + s.id);
    if (s.l > s.r || s.b > s.t)
      throw std::invalid_argument("inverted box at " + s.id);
    for (std::int64_t c : {s.l, s.b, s.r, s.t})
      if (c > kCoordLimit / scale || c < -kCoordLimit / scale)
        throw std::invalid_argument("coordinate out of supported range at " +
                                    s.id);
  }
}

bool positive_arms(const std::vector<LShape>& shapes) {
  return std::all_of(shapes.begin(), shapes.end(), [](const LShape& s) {
    return s.l < s.r && s.b < s.t;
  });
}

// A repairable touch: lengthening `shape`'s free end clears it. Which field
// moves follows from where the touch sits: the horizontal arm's free end is
// l for TopRight and r for TopLeft, the vertical arm's free end is b.
struct Fix {
  enum Kind { GrowLeft, GrowRight, GrowDown } kind;
  std::size_t shape;
};

struct Scan {
  std::vector<Fix> fixes;
  std::vector<std::string> blockers;  // violations no lengthening can clear
};

// Classifies every pairwise contact that is not a strict transversal
// crossing. Same-line arm overlaps are blockers: arms only ever grow, so an
// overlap can never be undone. A boundary contact of a vertical arm with a
// horizontal arm is repairable iff the boundary is a free end.
Scan scan_contacts(const std::vector<LShape>& shapes) {
  Scan scan;
  const auto overlap = [](std::int64_t a1, std::int64_t a2, std::int64_t b1,
                          std::int64_t b2) {
    return std::max(a1, b1) <= std::min(a2, b2);
  };

  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = i + 1; j < shapes.size(); ++j) {
      const LShape& u = shapes[i];
      const LShape& v = shapes[j];
      if (u.t == v.t && overlap(u.l, u.r, v.l, v.r))
        scan.blockers.push_back("collinear horizontal arms of " + u.id +
                                " and " + v.id);
      if (u.vertical_x() == v.vertical_x() && overlap(u.b, u.t, v.b, v.t))
        scan.blockers.push_back("collinear vertical arms of " + u.id +
                                " and " + v.id);
    }
  }

  // vertical arm of a against horizontal arm of h, ordered pairs
  for (std::size_t ai = 0; ai < shapes.size(); ++ai) {
    for (std::size_t hi = 0; hi < shapes.size(); ++hi) {
      if (ai == hi) continue;
      const LShape& a = shapes[ai];
      const LShape& h = shapes[hi];
      const std::int64_t x = a.vertical_x();
      if (!(h.l <= x && x <= h.r && a.b <= h.t && h.t <= a.t)) continue;
      if (h.l < x && x < h.r && a.b < h.t && h.t < a.t) continue;  // proper
      if (h.t == a.t) continue;  // same-line horizontals, recorded above
      if (x == h.l) {
        if (h.orient == Orientation::TopLeft) continue;  // same-line verticals
        scan.fixes.push_back({Fix::GrowLeft, hi});
      }
      if (x == h.r) {
        if (h.orient == Orientation::TopRight) continue;
        scan.fixes.push_back({Fix::GrowRight, hi});
      }
      if (h.t == a.b) scan.fixes.push_back({Fix::GrowDown, ai});
    }
  }
  return scan;
}

bool graph_unchanged(const LRep& work, const IntersectionGraph& expect) {
  return graphs_equal(extract_graph_lrep_raw(work), expect).equal;
}

// Moves one coordinate of one shape outward by 1..max_step units, keeping
// the first displacement that leaves the graph intact. `origin` is the
// post-scaling coordinate; total displacement from it stays below the scale
// so perturbed values can never reach another original coordinate.
bool apply_fix(LRep& work, const IntersectionGraph& graph0, const Fix& fix,
               std::int64_t origin, const DesingularizePolicy& pol) {
  LShape& s = work.shapes[fix.shape];
  std::int64_t& field = fix.kind == Fix::GrowLeft    ? s.l
                        : fix.kind == Fix::GrowRight ? s.r
                                                     : s.b;
  const std::int64_t dir = fix.kind == Fix::GrowRight ? 1 : -1;
  const std::int64_t saved = field;
  for (std::int64_t step = 1; step <= pol.max_step; ++step) {
    const std::int64_t candidate = saved + dir * step;
    if ((candidate - origin) * dir > pol.max_step) break;  // budget spent
    field = candidate;
    if (graph_unchanged(work, graph0)) return true;
  }
  field = saved;
  return false;
}

std::string describe(const Fix& fix, const std::vector<LShape>& shapes) {
  const char* what = fix.kind == Fix::GrowLeft    ? "left horizontal end"
                     : fix.kind == Fix::GrowRight ? "right horizontal end"
                                                  : "lower vertical end";
  return std::string(what) + " of " + shapes[fix.shape].id;
}

}  // namespace

LRep desingularize(const LRep& raw, const DesingularizePolicy& pol) {
  if (pol.scale < 2 || pol.max_step < 1 || pol.max_step >= pol.scale)
    throw std::invalid_argument("desingularize: need scale >= 2 and 0 < max_step < scale");
  basic_checks(raw, pol.scale);

  const IntersectionGraph graph0 = extract_graph_lrep_raw(raw);
  if (positive_arms(raw.shapes)) {
    const Scan s = scan_contacts(raw.shapes);
    if (s.fixes.empty() && s.blockers.empty()) return raw;  // already clean
  }

  LRep work = raw;
  work.canonical = false;
  for (LShape& s : work.shapes) {
    s.l *= pol.scale;
    s.b *= pol.scale;
    s.r *= pol.scale;
    s.t *= pol.scale;
  }
  // origins of the three movable fields, for the displacement budget
  struct Origin {
    std::int64_t l, b, r;
  };
  std::vector<Origin> origins;
  origins.reserve(work.shapes.size());
  for (const LShape& s : work.shapes) origins.push_back({s.l, s.b, s.r});

  const auto run_fix = [&](const Fix& f) {
    const Origin& o = origins[f.shape];
    const std::int64_t origin = f.kind == Fix::GrowLeft    ? o.l
                                : f.kind == Fix::GrowRight ? o.r
                                                           : o.b;
    if (!apply_fix(work, graph0, f, origin, pol))
      throw NormalizeError(
          "desingularize: no graph-preserving lengthening of the " +
          describe(f, work.shapes) + " within " +
          std::to_string(pol.max_step) + " units");
  };

  // degenerate arms first: grow the missing arm out of the corner
  for (std::size_t i = 0; i < work.shapes.size(); ++i) {
    const LShape& s = work.shapes[i];
    if (s.l == s.r)
      run_fix({s.orient == Orientation::TopRight ? Fix::GrowLeft
                                                 : Fix::GrowRight,
               i});
    if (s.b == s.t) run_fix({Fix::GrowDown, i});
  }

  const int max_fixes =
      pol.max_fixes > 0 ? pol.max_fixes
                        : static_cast<int>(12 * work.shapes.size() + 8);
  for (int round = 0;; ++round) {
    const Scan scan = scan_contacts(work.shapes);
    if (!scan.blockers.empty()) {
      std::ostringstream os;
      os << "desingularize: unrepairable contact";
      for (const auto& b : scan.blockers) os << "; " << b;
      throw NormalizeError(os.str());
    }
    if (scan.fixes.empty()) break;
    if (round >= max_fixes)
      throw NormalizeError("desingularize: fix budget exhausted near " +
                           describe(scan.fixes.front(), work.shapes));
    run_fix(scan.fixes.front());
  }

  if (!graph_unchanged(work, graph0))
    throw NormalizeError("desingularize: graph drifted");  // unreachable
  return work;
}

namespace {

// Replaces one axis's coordinates by their ranks in {1,...,2n}. Ties across
// vertices are broken by vertex index; same-vertex ties cannot occur once
// arms have positive length.
void assign_axis_ranks(std::vector<LShape>& shapes, bool x_axis) {
  struct Entry {
    std::int64_t value;
    std::size_t shape;
    bool upper;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const LShape& s = shapes[i];
    entries.push_back({x_axis ? s.l : s.b, i, false});
    entries.push_back({x_axis ? s.r : s.t, i, true});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.shape < b.shape;
  });
  for (std::size_t rank = 0; rank < entries.size(); ++rank) {
    const Entry& e = entries[rank];
    std::int64_t& field = x_axis ? (e.upper ? shapes[e.shape].r : shapes[e.shape].l)
                                 : (e.upper ? shapes[e.shape].t : shapes[e.shape].b);
    field = static_cast<std::int64_t>(rank + 1);
  }
}

}  // namespace

LRep normalize(const LRep& raw) {
  LRep out = desingularize(raw);
  assign_axis_ranks(out.shapes, true);
  assign_axis_ranks(out.shapes, false);
  out.canonical = true;

  const auto violations = validate_lrep(out);
  if (!violations.empty())
    throw NormalizeError("normalize: rank assignment left an invalid rep: " +
                         violations.front());
  if (!graphs_equal(extract_graph_lrep_raw(raw), extract_graph_lrep(out)).equal)
    throw NormalizeError(
        "normalize: tie-breaking could not preserve the intersection graph");
  return out;
}

}  // namespace lseg
