#pragma once

#include <cstdint>
#include <random>

#include "imcn/graph.hpp"

namespace imcn {

// Unbiased draw from [0, bound) by rejection, so generated graphs depend
// only on the seed and not on the platform's distribution internals.
std::uint32_t rng_below(std::mt19937& rng, std::uint32_t bound);

// Random forest: nodes attach to a random earlier node or start a fresh
// tree; always keeps at least one edge. n >= 2.
Graph gen_forest(int n, std::mt19937& rng);

// m edges drawn uniformly among all node pairs.
Graph gen_random(int n, int m, std::mt19937& rng);

// Random spanning tree plus extra edges; m >= n forces a cycle. n >= 3.
Graph gen_connected_cyclic(int n, int m, std::mt19937& rng);

}  // namespace imcn
