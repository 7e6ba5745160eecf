#include "attralign/reference.hpp"

#include <algorithm>
#include <cmath>

#include "attralign/bestest.hpp"
#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign::reference {

Graph build_knn_graph(const AttributeMatrix& x, int k) {
  const int n = x.rows();
  if (k < 1 || k >= n) throw ValidationError("knn: need 1 <= k < N");
  std::vector<Edge> edges;
  std::vector<std::pair<double, int>> dist;
  for (int i = 0; i < n; ++i) {
    dist.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = 0.0;
      for (int c = 0; c < x.cols(); ++c) {
        const double diff = x(i, c) - x(j, c);
        d += diff * diff;
      }
      dist.emplace_back(d, j);
    }
    std::sort(dist.begin(), dist.end());
    for (int t = 0; t < k; ++t) edges.push_back({i, dist[static_cast<std::size_t>(t)].second, 1.0});
  }
  return Graph::from_edges(n, edges);
}

std::pair<Graph, Partition> generate_sbm(const SbmParams& params, std::uint64_t seed) {
  const int n = params.n();
  std::vector<int> block(static_cast<std::size_t>(n));
  int node = 0;
  for (int b = 0; b < params.n_blocks(); ++b) {
    for (int c = 0; c < params.block_sizes[static_cast<std::size_t>(b)]; ++c) {
      block[static_cast<std::size_t>(node++)] = b;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    for (int j = i + 1; j < n; ++j) {
      const double p = block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]
                           ? params.p_in
                           : params.p_out;
      if (rng.uniform() < p) edges.push_back({i, j, 1.0});
    }
  }
  return {Graph::from_edges(n, edges), Partition(std::move(block), params.n_blocks())};
}

AlignmentResult run_test(const TransitionMatrix& t, const Partition& z_tilde,
                         const TestConfig& cfg) {
  AlignmentResult res;
  res.seed = cfg.seed;
  res.n_trials = cfg.n_trials;
  res.sample_size = cfg.sample_size;
  res.entropies.resize(static_cast<std::size_t>(cfg.n_trials));
  res.null_entropies.resize(static_cast<std::size_t>(cfg.n_trials));
  for (int i = 0; i < cfg.n_trials; ++i) {
    TrialResult r = run_trial(t, z_tilde, cfg.sample_size,
                              derive_seed(cfg.seed, static_cast<std::uint64_t>(i)),
                              cfg.propagate);
    res.entropies[static_cast<std::size_t>(i)] = r.entropy;
    res.null_entropies[static_cast<std::size_t>(i)] = r.null_entropy;
    for (auto& w : r.warnings) {
      res.warnings.push_back("trial " + std::to_string(i) + ": " + std::move(w));
    }
  }
  res.p_value = empirical_p(res.entropies, res.null_entropies);
  res.mann_whitney_auc = mann_whitney_auc(res.entropies, res.null_entropies);
  double se = 0.0, sn = 0.0;
  for (double v : res.entropies) se += v;
  for (double v : res.null_entropies) sn += v;
  res.mean_entropy = se / cfg.n_trials;
  res.mean_null_entropy = sn / cfg.n_trials;
  return res;
}

double bestest_pvalue(const Graph& g, const Partition& z_tilde, int n_perms,
                      std::uint64_t seed) {
  const double observed = bestest_entropy(block_stats(g, z_tilde));
  int below = 0;
  for (int t = 0; t < n_perms; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    Partition perm = z_tilde;
    rng.shuffle(perm.labels);
    if (bestest_entropy(block_stats(g, perm)) < observed) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(n_perms);
}

}  // namespace attralign::reference
