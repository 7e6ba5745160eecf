#pragma once

#include <cstdint>

#include "attralign/graph.hpp"

namespace attralign {

// Newman modularity Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(z_i, z_j).
// Throws ValidationError on an empty (edgeless) graph.
double modularity(const Graph& g, const Partition& z);

// Louvain heuristic: greedy local moving (first strictly improving move, node
// visit order shuffled by the seed) followed by graph aggregation, repeated
// until no modularity gain remains. Deterministic given the seed.
Partition louvain(const Graph& g, std::uint64_t seed);

}  // namespace attralign
