#include "lseg/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lseg {

BigCoord big_pow2(std::uint64_t e) {
  BigCoord r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigCoord big_pow(std::uint64_t base, std::uint64_t e) {
  BigCoord r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

std::size_t bit_length(const BigCoord& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool LRep::pure() const {
  return std::all_of(shapes.begin(), shapes.end(), [](const LShape& s) {
    return s.orient == Orientation::TopRight;
  });
}

IntersectionGraph::IntersectionGraph(std::vector<std::string> ids)
    : ids_(std::move(ids)), adj_(ids_.size() * ids_.size(), 0) {}

void IntersectionGraph::set_edge(std::size_t i, std::size_t j, bool on) {
  if (i == j) throw std::invalid_argument("self-loops are not representable");
  adj_[i * ids_.size() + j] = on ? 1 : 0;
  adj_[j * ids_.size() + i] = on ? 1 : 0;
}

bool IntersectionGraph::edge(std::size_t i, std::size_t j) const {
  return adj_[i * ids_.size() + j] != 0;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (edge(i, j)) ++c;
  return c;
}

namespace {

// Reports duplicates and out-of-range values for one axis of a canonical rep.
void check_axis(const std::vector<LShape>& shapes, char axis,
                std::vector<std::string>& out) {
  const std::int64_t hi = static_cast<std::int64_t>(2 * shapes.size());
  std::map<std::int64_t, std::vector<std::string>> owners;
  for (const LShape& s : shapes) {
    const std::int64_t lo_v = axis == 'x' ? s.l : s.b;
    const std::int64_t hi_v = axis == 'x' ? s.r : s.t;
    owners[lo_v].push_back(s.id);
    owners[hi_v].push_back(s.id);
    for (std::int64_t v : {lo_v, hi_v}) {
      if (v < 1 || v > hi) {
        std::ostringstream os;
        os << axis << "-coordinate " << v << " out of range [1," << hi
           << "] at " << s.id;
        out.push_back(os.str());
      }
    }
  }
  for (const auto& [value, ids] : owners) {
    if (ids.size() > 1) {
      std::ostringstream os;
      os << "duplicate " << axis << "-coordinate " << value << " (";
      for (std::size_t i = 0; i < ids.size(); ++i)
        os << (i ? ", " : "") << ids[i];
      os << ")";
      out.push_back(os.str());
    }
  }
}

}  // namespace

bool coordinates_canonical(const std::vector<LShape>& shapes) {
  const std::int64_t two_n = static_cast<std::int64_t>(2 * shapes.size());
  std::set<std::int64_t> xs, ys;
  for (const LShape& s : shapes) {
    for (std::int64_t v : {s.l, s.r}) {
      if (v < 1 || v > two_n || !xs.insert(v).second) return false;
    }
    for (std::int64_t v : {s.b, s.t}) {
      if (v < 1 || v > two_n || !ys.insert(v).second) return false;
    }
  }
  return true;
}

std::vector<std::string> validate_lrep(const LRep& rep) {
  std::vector<std::string> out;

  if (rep.n != static_cast<std::int64_t>(rep.shapes.size())) {
    std::ostringstream os;
    os << "vertex count mismatch: n=" << rep.n << " but " << rep.shapes.size()
       << " shapes";
    out.push_back(os.str());
  }

  std::set<std::string> seen;
  for (const LShape& s : rep.shapes) {
    if (!seen.insert(s.id).second) out.push_back("duplicate id " + s.id);
    if (s.l == s.r) out.push_back("zero-width box at " + s.id);
    if (s.l > s.r) out.push_back("inverted x-range at " + s.id);
    if (s.b == s.t) out.push_back("zero-height box at " + s.id);
    if (s.b > s.t) out.push_back("inverted y-range at " + s.id);
  }

  if (rep.canonical) {
    check_axis(rep.shapes, 'x', out);
    check_axis(rep.shapes, 'y', out);
  } else if (coordinates_canonical(rep.shapes)) {
    out.push_back("canonical flag unset on canonical coordinates");
  }

  return out;
}

}  // namespace lseg
