#pragma once

#include <cstdint>

#include "attralign/aligntest.hpp"
#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"
#include "attralign/synth.hpp"

namespace attralign::reference {

// Plain single-threaded counterparts of the OpenMP kernels. They share the
// contracts (and seed derivation) of the parallel versions but none of the
// loop structure, so tests can require exact agreement and the benchmark can
// measure the speedup.

// Full-sort nearest-neighbor scan.
Graph build_knn_graph(const AttributeMatrix& x, int k);

// Row-by-row pair scan.
std::pair<Graph, Partition> generate_sbm(const SbmParams& params, std::uint64_t seed);

// Sequential trial loop.
AlignmentResult run_test(const TransitionMatrix& t, const Partition& z_tilde,
                         const TestConfig& cfg);

// Sequential permutation loop.
double bestest_pvalue(const Graph& g, const Partition& z_tilde, int n_perms,
                      std::uint64_t seed);

}  // namespace attralign::reference
