#include "attralign/bestest.hpp"

#include <cmath>
#include <string>

#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign {

BlockStats block_stats(const Graph& g, const Partition& z_tilde) {
  const int n = g.n_nodes();
  if (z_tilde.size() != n) {
    throw ValidationError("block_stats: partition length " +
                          std::to_string(z_tilde.size()) + " does not match N=" +
                          std::to_string(n));
  }
  const int k = z_tilde.n_classes;
  BlockStats stats;
  stats.m = Matrix(k, k);
  stats.sizes.assign(static_cast<std::size_t>(k), 0);
  for (int v : z_tilde.labels) stats.sizes[static_cast<std::size_t>(v)]++;
  for (const Edge& e : g.edges()) {
    const int r = z_tilde.labels[static_cast<std::size_t>(e.i)];
    const int s = z_tilde.labels[static_cast<std::size_t>(e.j)];
    stats.m(r, s) += 1.0;
    stats.m(s, r) += 1.0;
  }
  return stats;
}

double bestest_entropy(const BlockStats& stats) {
  const int k = static_cast<int>(stats.sizes.size());
  double h = 0.0;
  for (int r = 0; r < k; ++r) {
    for (int s = 0; s < k; ++s) {
      const double pairs = static_cast<double>(stats.sizes[static_cast<std::size_t>(r)]) *
                           static_cast<double>(stats.sizes[static_cast<std::size_t>(s)]);
      const double m = stats.m(r, s);
      const double w = m / pairs;
      if (m > 0.0 && w < 1.0) {
        h += m * std::log(w);
      }
      const double holes = pairs - m;
      if (holes > 0.0 && w > 0.0) {
        h += holes * std::log(1.0 - w);
      }
    }
  }
  return -0.5 * h;
}

double bestest_pvalue(const Graph& g, const Partition& z_tilde, int n_perms,
                      std::uint64_t seed) {
  if (n_perms < 1) throw ValidationError("bestest: n_perms must be >= 1");
  const double observed = bestest_entropy(block_stats(g, z_tilde));
  int below = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : below)
  for (int t = 0; t < n_perms; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    Partition perm = z_tilde;
    rng.shuffle(perm.labels);
    if (bestest_entropy(block_stats(g, perm)) < observed) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(n_perms);
}

}  // namespace attralign
