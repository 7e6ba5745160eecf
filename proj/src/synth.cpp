#include "attralign/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign {

namespace {

void validate(const SbmParams& params) {
  if (params.block_sizes.empty()) throw ValidationError("sbm: no blocks");
  for (int b : params.block_sizes) {
    if (b < 1) throw ValidationError("sbm: block sizes must be >= 1");
  }
  if (params.p_in < 0.0 || params.p_in > 1.0) {
    throw ValidationError("sbm: p_in must lie in [0, 1]");
  }
  if (params.p_out < 0.0 || params.p_out > 1.0) {
    throw ValidationError("sbm: p_out must lie in [0, 1]");
  }
}

}  // namespace

SbmParams equal_blocks(int n, int k, double p_in, double p_out) {
  if (k < 1 || n < k) throw ValidationError("sbm: need 1 <= K <= N");
  if (n % k != 0) {
    throw ValidationError("sbm: N=" + std::to_string(n) +
                          " not divisible into K=" + std::to_string(k) + " equal blocks");
  }
  SbmParams params;
  params.block_sizes.assign(static_cast<std::size_t>(k), n / k);
  params.p_in = p_in;
  params.p_out = p_out;
  return params;
}

std::pair<Graph, Partition> generate_sbm(const SbmParams& params, std::uint64_t seed) {
  validate(params);
  const int n = params.n();
  std::vector<int> block(static_cast<std::size_t>(n));
  {
    int node = 0;
    for (int b = 0; b < params.n_blocks(); ++b) {
      for (int c = 0; c < params.block_sizes[static_cast<std::size_t>(b)]; ++c) {
        block[static_cast<std::size_t>(node++)] = b;
      }
    }
  }

  // Row i draws its pairs (i, j>i) from its own derived stream, so rows are
  // independent work items and the output does not depend on thread count.
  std::vector<std::vector<Edge>> row_edges(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 32)
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    auto& out = row_edges[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const double p = block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]
                           ? params.p_in
                           : params.p_out;
      if (rng.uniform() < p) out.push_back({i, j, 1.0});
    }
  }

  std::vector<Edge> edges;
  for (const auto& row : row_edges) edges.insert(edges.end(), row.begin(), row.end());
  return {Graph::from_edges(n, edges), Partition(std::move(block), params.n_blocks())};
}

GaussianAttributeParams sample_gaussian_params(int k, int dims, std::uint64_t seed,
                                               double mean_scale) {
  if (k < 1 || dims < 1) throw ValidationError("gaussian params: need K >= 1 and p >= 1");
  Rng rng(seed);
  GaussianAttributeParams params;
  params.means = Matrix(k, dims);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < dims; ++c) params.means(r, c) = mean_scale * rng.normal();
  }
  return params;
}

AttributeMatrix generate_attributes(const Partition& z,
                                    const GaussianAttributeParams& params,
                                    std::uint64_t seed) {
  if (params.means.rows() != z.n_classes) {
    throw ValidationError("attributes: mean matrix has " +
                          std::to_string(params.means.rows()) + " rows but partition has " +
                          std::to_string(z.n_classes) + " classes");
  }
  const int n = z.size();
  const int p = params.means.cols();
  AttributeMatrix x(n, p);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int k = z.labels[static_cast<std::size_t>(i)];
    for (int c = 0; c < p; ++c) x(i, c) = params.means(k, c) + rng.normal();
  }
  return x;
}

Partition permute_fraction(const Partition& z, double fraction, std::uint64_t seed) {
  if (fraction < 0.0 || fraction > 1.0) {
    throw ValidationError("permute_fraction: fraction must lie in [0, 1]");
  }
  const int n = z.size();
  // ceil with a guard against representation noise (0.01 * 200 -> 2, not 3).
  int m = static_cast<int>(std::ceil(fraction * n - 1e-9));
  m = std::max(0, std::min(n, m));
  Partition out = z;
  if (m <= 1) return out;
  Rng rng(seed);
  const std::vector<int> idx = rng.sample_indices(n, m);
  std::vector<int> picked(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    picked[static_cast<std::size_t>(t)] = z.labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
  }
  rng.shuffle(picked);
  for (int t = 0; t < m; ++t) {
    out.labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])] =
        picked[static_cast<std::size_t>(t)];
  }
  return out;
}

}  // namespace attralign
