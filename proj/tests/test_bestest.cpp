#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "attralign/bestest.hpp"
#include "attralign/errors.hpp"
#include "attralign/reference.hpp"
#include "attralign/rng.hpp"
#include "attralign/synth.hpp"

using namespace attralign;

namespace {

// Independent oracle: Bernoulli log-likelihood accumulated over every ordered
// node pair (self-pairs included as non-edges), halved and negated.
double pair_oracle_entropy(const Graph& g, const Partition& z) {
  const int k = z.n_classes;
  Matrix m(k, k);
  std::vector<double> sizes(static_cast<std::size_t>(k), 0.0);
  for (int v : z.labels) sizes[static_cast<std::size_t>(v)] += 1.0;
  for (const Edge& e : g.edges()) {
    m(z.labels[static_cast<std::size_t>(e.i)], z.labels[static_cast<std::size_t>(e.j)]) += 1.0;
    m(z.labels[static_cast<std::size_t>(e.j)], z.labels[static_cast<std::size_t>(e.i)]) += 1.0;
  }
  double ll = 0.0;
  for (int i = 0; i < g.n_nodes(); ++i) {
    for (int j = 0; j < g.n_nodes(); ++j) {
      const int r = z.labels[static_cast<std::size_t>(i)];
      const int s = z.labels[static_cast<std::size_t>(j)];
      const double w = m(r, s) / (sizes[static_cast<std::size_t>(r)] *
                                  sizes[static_cast<std::size_t>(s)]);
      const bool edge = i != j && g.weight(i, j) > 0.0;
      if (edge) {
        ll += w > 0.0 ? std::log(w) : 0.0;
      } else {
        ll += w < 1.0 ? std::log(1.0 - w) : 0.0;
      }
    }
  }
  return -0.5 * ll;
}

Graph two_triangles() {
  return Graph::from_edges(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                               {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
}

}  // namespace

TEST_CASE("block_stats ordered-pair counts") {
  const Graph g = two_triangles();
  const Partition z({0, 0, 0, 1, 1, 1}, 2);
  const BlockStats stats = block_stats(g, z);
  CHECK(stats.m(0, 0) == 6.0);  // each within-edge counted in both orientations
  CHECK(stats.m(1, 1) == 6.0);
  CHECK(stats.m(0, 1) == 0.0);
  CHECK(stats.m(1, 0) == 0.0);
  CHECK(stats.sizes == std::vector<int>{3, 3});

  const Partition single(std::vector<int>(6, 0), 1);
  const BlockStats s1 = block_stats(g, single);
  CHECK(s1.m(0, 0) == 12.0);  // 6 edges, both orientations

  const Graph empty = Graph::from_edges(4, {});
  const BlockStats s2 = block_stats(empty, Partition({0, 1, 0, 1}, 2));
  for (double v : s2.m.data) CHECK(v == 0.0);
}

TEST_CASE("bestest_entropy values") {
  SUBCASE("single block, two nodes, one edge") {
    const Graph g = Graph::from_edges(2, {{0, 1, 1.0}});
    const Partition z({0, 0}, 1);
    // m=2 over 4 ordered pairs: -1/2 [2 ln 1/2 + 2 ln 1/2] = 2 ln 2.
    CHECK(bestest_entropy(block_stats(g, z)) == doctest::Approx(2.0 * std::log(2.0)));
    CHECK(bestest_entropy(block_stats(g, z)) ==
          doctest::Approx(pair_oracle_entropy(g, z)).epsilon(1e-12));
  }
  SUBCASE("two perfect cliques: diagonal density (n-1)/n keeps entropy positive") {
    const Graph g = two_triangles();
    const Partition z({0, 0, 0, 1, 1, 1}, 2);
    const double h = bestest_entropy(block_stats(g, z));
    const double oracle = pair_oracle_entropy(g, z);
    CHECK(h == doctest::Approx(oracle).epsilon(1e-12));
    // -1/2 * 2 * [6 ln(2/3) + 3 ln(1/3)]
    CHECK(h == doctest::Approx(5.728627514653316));
  }
  SUBCASE("empty graph scores zero") {
    const Graph g = Graph::from_edges(4, {});
    CHECK(bestest_entropy(block_stats(g, Partition({0, 1, 0, 1}, 2))) == 0.0);
  }
  SUBCASE("complete bipartite block reaches density one without NaN") {
    const Graph g = Graph::from_edges(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
    const Partition z({0, 0, 1, 1}, 2);
    const double h = bestest_entropy(block_stats(g, z));
    CHECK(std::isfinite(h));
    CHECK(h == doctest::Approx(pair_oracle_entropy(g, z)).epsilon(1e-12));
  }
  SUBCASE("community relabeling leaves entropy unchanged") {
    const Graph g = two_triangles();
    const Partition a({0, 0, 0, 1, 1, 1}, 2);
    const Partition b({1, 1, 1, 0, 0, 0}, 2);
    CHECK(bestest_entropy(block_stats(g, a)) ==
          doctest::Approx(bestest_entropy(block_stats(g, b))));
  }
}

TEST_CASE("bestest_entropy matches the pair oracle on random graphs") {
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + rng.uniform_int(6);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.45) edges.push_back({i, j, 1.0});
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const int k = 1 + rng.uniform_int(3);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& v : labels) v = rng.uniform_int(k);
    const Partition z(labels, k);
    CHECK(bestest_entropy(block_stats(g, z)) ==
          doctest::Approx(pair_oracle_entropy(g, z)).epsilon(1e-10));
  }
}

TEST_CASE("bestest_entropy invariant under node reordering") {
  Rng rng(66);
  auto [g, z] = generate_sbm(equal_blocks(30, 3, 0.6, 0.1), 8);
  const double h = bestest_entropy(block_stats(g, z));

  // Reverse the node order.
  const int n = g.n_nodes();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({n - 1 - e.i, n - 1 - e.j, e.weight});
  const Graph rg = Graph::from_edges(n, edges);
  std::vector<int> labels(z.labels.rbegin(), z.labels.rend());
  CHECK(bestest_entropy(block_stats(rg, Partition(labels, z.n_classes))) ==
        doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("bestest_pvalue") {
  SUBCASE("planted partition on a strong SBM is significant") {
    auto [g, z] = generate_sbm(equal_blocks(120, 4, 0.6, 0.02), 17);
    const double p = bestest_pvalue(g, z, 200, 5);
    CHECK(p <= 0.01);
  }
  SUBCASE("random labels on a structureless graph are not") {
    auto [g, planted] = generate_sbm(equal_blocks(120, 4, 0.15, 0.15), 18);
    Rng rng(3);
    Partition noise(std::vector<int>(120), 4);
    for (auto& v : noise.labels) v = rng.uniform_int(4);
    const double p = bestest_pvalue(g, noise, 200, 5);
    CHECK(p > 0.05);
  }
  SUBCASE("single permutation gives 0 or 1") {
    auto [g, z] = generate_sbm(equal_blocks(20, 2, 0.6, 0.1), 19);
    const double p = bestest_pvalue(g, z, 1, 5);
    CHECK((p == 0.0 || p == 1.0));
  }
  SUBCASE("parallel loop matches the serial reference") {
    auto [g, z] = generate_sbm(equal_blocks(60, 3, 0.5, 0.1), 20);
    CHECK(bestest_pvalue(g, z, 300, 7) == reference::bestest_pvalue(g, z, 300, 7));
  }
}
