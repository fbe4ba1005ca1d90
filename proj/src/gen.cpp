#include "lseg/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace lseg {

namespace {

// Fisher-Yates with a 64-bit generator; the modulo bias at these sizes is
// far below anything the marginal checks could see.
void shuffle_values(std::vector<std::int64_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

// Random perfect pairing of {1,...,2n} into n (lo,hi) pairs.
std::vector<std::pair<std::int64_t, std::int64_t>> random_pairing(
    std::int64_t n, std::mt19937_64& rng) {
  std::vector<std::int64_t> vals(static_cast<std::size_t>(2 * n));
  std::iota(vals.begin(), vals.end(), 1);
  shuffle_values(vals, rng);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto [lo, hi] = std::minmax(vals[2 * i], vals[2 * i + 1]);
    pairs.emplace_back(lo, hi);
  }
  return pairs;
}

LShape shape(std::string id, std::int64_t l, std::int64_t b, std::int64_t r,
             std::int64_t t, Orientation o = Orientation::TopRight) {
  return LShape{std::move(id), l, b, r, t, o};
}

}  // namespace

LRep gen_random(std::int64_t n, GenMode mode, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  std::mt19937_64 rng(seed);
  const auto xs = random_pairing(n, rng);
  const auto ys = random_pairing(n, rng);

  LRep rep;
  rep.n = n;
  rep.canonical = true;
  rep.shapes.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    Orientation o = Orientation::TopRight;
    if (mode == GenMode::Mixed && (rng() & 1)) o = Orientation::TopLeft;
    rep.shapes.push_back(shape("v" + std::to_string(i), xs[i].first,
                               ys[i].first, xs[i].second, ys[i].second, o));
  }
  return rep;
}

LRep gen_named(const std::string& name) {
  LRep rep;
  rep.canonical = true;

  if (name == "fig1-like") {
    // Three TopRight curves: a-b non-adjacent with t_a > t_b and r_a > r_b
    // (nested diagonals), a-c non-adjacent by slab separation (r_c < l_a),
    // b-c adjacent. Edge set {(b,c)}.
    rep.n = 3;
    rep.shapes = {shape("a", 4, 3, 6, 5), shape("b", 1, 1, 5, 4),
                  shape("c", 2, 2, 3, 6)};
  } else if (name == "fig2-like") {
    // Mixed orientations: b's vertical arm crosses the horizontals of both
    // a (upward diagonal) and c (downward diagonal); d sits in a separate
    // vertical slab. Edge set {(a,b),(b,c)}.
    rep.n = 4;
    rep.shapes = {shape("a", 2, 2, 5, 6, Orientation::TopLeft),
                  shape("b", 1, 1, 4, 8), shape("c", 3, 3, 6, 5),
                  shape("d", 7, 4, 8, 7, Orientation::TopLeft)};
  } else if (name == "path3") {
    rep.n = 3;
    rep.shapes = {shape("a", 1, 4, 4, 6), shape("b", 2, 2, 5, 5),
                  shape("c", 3, 1, 6, 3)};
  } else if (name == "cycle4") {
    rep.n = 4;
    rep.shapes = {shape("a", 1, 1, 7, 5), shape("b", 3, 2, 4, 8),
                  shape("c", 2, 3, 8, 6), shape("d", 5, 4, 6, 7)};
  } else if (name == "star4") {
    // a is the center.
    rep.n = 4;
    rep.shapes = {shape("a", 1, 1, 8, 5), shape("b", 2, 2, 5, 6),
                  shape("c", 3, 3, 6, 7), shape("d", 4, 4, 7, 8)};
  } else {
    std::string known;
    for (const auto& k : gen_catalog()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown instance name \"" + name +
                                "\" (known: " + known + ")");
  }
  return rep;
}

std::vector<std::string> gen_catalog() {
  return {"fig1-like", "fig2-like", "path3", "cycle4", "star4"};
}

}  // namespace lseg
