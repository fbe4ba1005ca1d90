#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lseg/model.hpp"

namespace lseg {

enum class GenMode { Pure, Mixed };

// Canonical rep with uniformly random perfect pairings of {1,...,2n} per
// axis; orientations uniform in mixed mode. Deterministic given the seed.
LRep gen_random(std::int64_t n, GenMode mode, std::uint64_t seed);

// Hand-built catalog instances (figure-style walkthroughs and small planar
// staples). Throws std::invalid_argument for unknown names.
LRep gen_named(const std::string& name);

// Names gen_named accepts.
std::vector<std::string> gen_catalog();

}  // namespace lseg
