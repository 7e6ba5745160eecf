#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// Planted-partition stochastic block model parameters.
struct SbmParams {
  std::vector<int> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;

  int n() const {
    int total = 0;
    for (int b : block_sizes) total += b;
    return total;
  }
  int n_blocks() const { return static_cast<int>(block_sizes.size()); }
};

// Equal blocks of n/k nodes each; n must be divisible by k.
SbmParams equal_blocks(int n, int k, double p_in, double p_out);

// Per-community Gaussian attribute parameters: row k of `means` is the mean
// vector of community k; covariance is fixed to the identity.
struct GaussianAttributeParams {
  Matrix means;  // K x p
};

// Each unordered pair (i, j) receives an edge independently with probability
// p_in when the planted blocks match, p_out otherwise. Returns the graph and
// the planted block assignment. Deterministic given the seed; pair draws are
// keyed per row so generation parallelizes without changing the result.
std::pair<Graph, Partition> generate_sbm(const SbmParams& params, std::uint64_t seed);

// Mean entries are i.i.d. standard normal scaled by mean_scale.
GaussianAttributeParams sample_gaussian_params(int k, int dims, std::uint64_t seed,
                                               double mean_scale = 1.0);

// Row i ~ N(mu_{z_i}, I). Deterministic given the seed.
AttributeMatrix generate_attributes(const Partition& z,
                                    const GaussianAttributeParams& params,
                                    std::uint64_t seed);

// Picks ceil(fraction * N) positions uniformly without replacement and applies
// a uniform random permutation to the labels at those positions; the label
// multiset is preserved exactly.
Partition permute_fraction(const Partition& z, double fraction, std::uint64_t seed);

}  // namespace attralign
