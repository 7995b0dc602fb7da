#pragma once

#include <cstdint>

#include "sepdim/graph.hpp"

namespace sepdim {

// Uniform-pairing (configuration model) sampler for simple d-regular graphs.
// Points are paired incrementally, drawing uniformly among the remaining
// points and rejecting loops and repeated pairs in place; a dead end (some
// points left but no admissible pair) restarts the whole pairing. Restarts
// are capped at `max_attempts`.
//
// Requires n*d even and d < n. Deterministic for a fixed seed.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 10000);

}  // namespace sepdim
