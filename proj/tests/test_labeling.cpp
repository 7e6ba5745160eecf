#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "attralign/errors.hpp"
#include "attralign/labeling.hpp"
#include "attralign/rng.hpp"
#include "attralign/synth.hpp"

using namespace attralign;

namespace {

// Exhaustive minimum-WCSS assignment for tiny inputs, used as the k-means
// oracle.
double brute_force_wcss(const AttributeMatrix& x, int k, std::vector<int>& best_assign) {
  const int n = x.rows();
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  double best = 1e300;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      assign[static_cast<std::size_t>(i)] = static_cast<int>(c % k);
      c /= k;
    }
    std::vector<std::vector<double>> centers(
        static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(x.cols()), 0.0));
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) {
      counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]++;
      for (int j = 0; j < x.cols(); ++j) {
        centers[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(j)] += x(i, j);
      }
    }
    for (int c2 = 0; c2 < k; ++c2) {
      if (counts[static_cast<std::size_t>(c2)] == 0) continue;
      for (auto& v : centers[static_cast<std::size_t>(c2)]) {
        v /= counts[static_cast<std::size_t>(c2)];
      }
    }
    double wcss = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < x.cols(); ++j) {
        const double d = x(i, j) - centers[static_cast<std::size_t>(
                                      assign[static_cast<std::size_t>(i)])]
                                          [static_cast<std::size_t>(j)];
        wcss += d * d;
      }
    }
    if (wcss < best) {
      best = wcss;
      best_assign = assign;
    }
  }
  return best;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  // Equal up to relabeling.
  std::vector<int> map_ab(a.size(), -1), map_ba(b.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (map_ab[static_cast<std::size_t>(a[i])] == -1) map_ab[static_cast<std::size_t>(a[i])] = b[i];
    if (map_ba[static_cast<std::size_t>(b[i])] == -1) map_ba[static_cast<std::size_t>(b[i])] = a[i];
    if (map_ab[static_cast<std::size_t>(a[i])] != b[i]) return false;
    if (map_ba[static_cast<std::size_t>(b[i])] != a[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kmeans on two well separated pairs") {
  AttributeMatrix x(4, 1);
  x(0, 0) = 0.0;
  x(1, 0) = 0.1;
  x(2, 0) = 10.0;
  x(3, 0) = 10.1;
  KmeansConfig cfg;
  cfg.k = 2;
  cfg.seed = 3;
  const Partition z = kmeans_label(x, cfg);

  std::vector<int> oracle;
  brute_force_wcss(x, 2, oracle);
  CHECK(same_partition(z.labels, oracle));
  CHECK(z.labels[0] == z.labels[1]);
  CHECK(z.labels[2] == z.labels[3]);
  CHECK(z.labels[0] != z.labels[2]);
}

TEST_CASE("kmeans edge cases") {
  Rng rng(17);
  AttributeMatrix x(12, 2);
  for (double& v : x.data) v = rng.normal();

  SUBCASE("K=1 puts everything together") {
    KmeansConfig cfg;
    cfg.k = 1;
    const Partition z = kmeans_label(x, cfg);
    for (int v : z.labels) CHECK(v == 0);
  }
  SUBCASE("K=N isolates every point with zero WCSS") {
    KmeansConfig cfg;
    cfg.k = 12;
    cfg.seed = 5;
    const Partition z = kmeans_label(x, cfg);
    std::vector<int> seen(12, 0);
    for (int v : z.labels) seen[static_cast<std::size_t>(v)]++;
    for (int c : seen) CHECK(c == 1);
  }
  SUBCASE("K > N rejected") {
    KmeansConfig cfg;
    cfg.k = 13;
    CHECK_THROWS_AS(kmeans_label(x, cfg), ValidationError);
  }
  SUBCASE("labels stay in range and runs are repeatable") {
    KmeansConfig cfg;
    cfg.k = 4;
    cfg.seed = 21;
    const Partition a = kmeans_label(x, cfg);
    const Partition b = kmeans_label(x, cfg);
    CHECK(a.labels == b.labels);
    for (int v : a.labels) {
      CHECK(v >= 0);
      CHECK(v < 4);
    }
  }
  SUBCASE("constant data with K clusters still returns K classes") {
    AttributeMatrix flat(8, 1, 2.5);
    KmeansConfig cfg;
    cfg.k = 3;
    cfg.seed = 1;
    const Partition z = kmeans_label(flat, cfg);
    CHECK(z.n_classes == 3);
    for (int v : z.labels) {
      CHECK(v >= 0);
      CHECK(v < 3);
    }
  }
}

TEST_CASE("kmeans recovers well-separated generated clusters") {
  Partition z(std::vector<int>(150, 0), 3);
  for (int i = 0; i < 150; ++i) z.labels[static_cast<std::size_t>(i)] = i / 50;
  const auto params = sample_gaussian_params(3, 4, 11, 50.0);
  const AttributeMatrix x = generate_attributes(z, params, 13);
  KmeansConfig cfg;
  cfg.k = 3;
  cfg.seed = 2;
  const Partition found = kmeans_label(x, cfg);
  CHECK(nmi(found, z) == doctest::Approx(1.0));
}

TEST_CASE("discrete_label") {
  const Partition z = discrete_label<std::string>({"a", "b", "a"});
  CHECK(z.labels == std::vector<int>{0, 1, 0});
  CHECK(z.n_classes == 2);

  const Partition one = discrete_label<int>({7, 7, 7});
  CHECK(one.n_classes == 1);
  for (int v : one.labels) CHECK(v == 0);

  const Partition all = discrete_label<double>({3.0, 1.0, 2.0});
  CHECK(all.n_classes == 3);
  CHECK(all.labels == std::vector<int>{0, 1, 2});
}

TEST_CASE("nmi reference values") {
  const Partition a({0, 0, 1, 1}, 2);
  const Partition b({0, 1, 0, 1}, 2);
  CHECK(nmi(a, b) == doctest::Approx(0.0));

  CHECK(nmi(a, a) == doctest::Approx(1.0));

  const Partition block({0, 0, 0, 0}, 1);
  CHECK(nmi(block, a) == doctest::Approx(0.0));
  CHECK(nmi(block, block) == doctest::Approx(1.0));

  const Partition c({0, 1, 2, 3}, 4);
  CHECK_THROWS_AS(nmi(a, Partition({0, 1}, 2)), ValidationError);
  CHECK(nmi(a, c) > 0.0);
}

TEST_CASE("nmi symmetry and relabel invariance") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + rng.uniform_int(40);
    const int ka = 1 + rng.uniform_int(5);
    const int kb = 1 + rng.uniform_int(5);
    std::vector<int> la(static_cast<std::size_t>(n)), lb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      la[static_cast<std::size_t>(i)] = rng.uniform_int(ka);
      lb[static_cast<std::size_t>(i)] = rng.uniform_int(kb);
    }
    const Partition a(la, ka);
    const Partition b(lb, kb);
    const double ab = nmi(a, b);
    CHECK(ab == doctest::Approx(nmi(b, a)));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);

    // Relabel a by reversing class indices.
    std::vector<int> rl = la;
    for (auto& v : rl) v = ka - 1 - v;
    CHECK(nmi(Partition(rl, ka), b) == doctest::Approx(ab));
  }
}

TEST_CASE("zscore_columns") {
  AttributeMatrix x(4, 2);
  for (int i = 0; i < 4; ++i) {
    x(i, 0) = 10.0 * i;
    x(i, 1) = 5.0;  // constant column
  }
  const AttributeMatrix z = zscore_columns(x);
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < 4; ++i) mean += z(i, 0);
  mean /= 4.0;
  for (int i = 0; i < 4; ++i) var += (z(i, 0) - mean) * (z(i, 0) - mean);
  var /= 4.0;
  CHECK(mean == doctest::Approx(0.0));
  CHECK(var == doctest::Approx(1.0));
  for (int i = 0; i < 4; ++i) CHECK(z(i, 1) == doctest::Approx(0.0));
}
