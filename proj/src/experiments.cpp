#include "attralign/experiments.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "attralign/aligntest.hpp"
#include "attralign/bestest.hpp"
#include "attralign/community.hpp"
#include "attralign/errors.hpp"
#include "attralign/knn.hpp"
#include "attralign/labeling.hpp"
#include "attralign/rng.hpp"
#include "attralign/synth.hpp"

namespace attralign {

namespace {

// Stage streams inside an experiment's master seed.
enum Stream : std::uint64_t {
  kGraphSeed = 1,
  kMeansSeed = 2,
  kAttrSeed = 3,
  kClusterSeed = 4,
  kTestSeed = 5,
  kPerFraction = 1000,
  kPerRealization = 10000,
  kPerRealizationTest = 20000,
  kPerMarkerCluster = 100,
  kPerMarkerTest = 30000,
};

}  // namespace

std::vector<PerturbRow> run_perturb_experiment(const PerturbConfig& cfg) {
  if (cfg.fractions.empty()) throw ValidationError("perturb: empty fraction grid");
  for (double f : cfg.fractions) {
    if (f < 0.0 || f > 1.0) throw ValidationError("perturb: fractions must lie in [0, 1]");
  }

  const SbmParams params = equal_blocks(cfg.n, cfg.k, cfg.p_in, cfg.p_out);
  auto [graph, planted] = generate_sbm(params, derive_seed(cfg.seed, kGraphSeed));
  const auto gauss = sample_gaussian_params(cfg.k, cfg.attr_dims,
                                            derive_seed(cfg.seed, kMeansSeed), cfg.mean_scale);
  const AttributeMatrix x = generate_attributes(planted, gauss, derive_seed(cfg.seed, kAttrSeed));

  KmeansConfig km;
  km.k = cfg.k;
  km.seed = derive_seed(cfg.seed, kClusterSeed);
  const Partition z_tilde = kmeans_label(x, km);

  const TransitionMatrix t = transition_matrix(graph, cfg.mode);
  TestConfig test_cfg;
  test_cfg.n_trials = cfg.n_trials;
  test_cfg.sample_size = cfg.sample_size;
  test_cfg.mode = cfg.mode;
  // One test seed for every fraction: rows differ only through the labels.
  test_cfg.seed = derive_seed(cfg.seed, kTestSeed);

  std::vector<PerturbRow> rows;
  rows.reserve(cfg.fractions.size());
  for (std::size_t fi = 0; fi < cfg.fractions.size(); ++fi) {
    const double f = cfg.fractions[fi];
    const Partition z_f =
        permute_fraction(z_tilde, f, derive_seed(cfg.seed, kPerFraction + fi));
    const AlignmentResult r = run_test(t, z_f, test_cfg);
    PerturbRow row;
    row.fraction = f;
    row.mean_entropy = r.mean_entropy;
    row.p_value = r.p_value;
    row.bestest_entropy = bestest_entropy(block_stats(graph, z_f));
    rows.push_back(row);
  }
  return rows;
}

double sweep_p_out(int n, int k, double mean_degree, double p_in) {
  if (k < 1 || n < k || n % k != 0) {
    throw ValidationError("sweep: N must split into K equal blocks");
  }
  const double block = static_cast<double>(n) / k;
  const double p_out = (mean_degree - p_in * (block - 1.0)) / (n - block);
  if (p_out < 0.0 || p_out > 1.0) {
    throw ValidationError("sweep: mean degree " + std::to_string(mean_degree) +
                          " unreachable at p_in=" + std::to_string(p_in));
  }
  return p_out;
}

std::vector<SweepRow> run_sweep_experiment(const SweepConfig& cfg) {
  if (cfg.p_in_grid.empty()) throw ValidationError("sweep: empty p_in grid");
  if (cfg.realizations < 1) throw ValidationError("sweep: need at least one realization");

  // One fixed attribute matrix and planted partition for the whole sweep; only
  // the graph is redrawn per realization.
  const SbmParams proto = equal_blocks(cfg.n, cfg.k, 0.5, 0.5);
  Partition planted(std::vector<int>(static_cast<std::size_t>(cfg.n)), cfg.k);
  {
    const int block = cfg.n / cfg.k;
    for (int i = 0; i < cfg.n; ++i) planted.labels[static_cast<std::size_t>(i)] = i / block;
  }
  const auto gauss = sample_gaussian_params(cfg.k, cfg.attr_dims,
                                            derive_seed(cfg.seed, kMeansSeed), cfg.mean_scale);
  const AttributeMatrix x = generate_attributes(planted, gauss, derive_seed(cfg.seed, kAttrSeed));
  KmeansConfig km;
  km.k = cfg.k;
  km.seed = derive_seed(cfg.seed, kClusterSeed);
  const Partition z_tilde = kmeans_label(x, km);

  std::vector<SweepRow> rows;
  rows.reserve(cfg.p_in_grid.size());
  for (std::size_t gi = 0; gi < cfg.p_in_grid.size(); ++gi) {
    const double p_in = cfg.p_in_grid[gi];
    const double p_out = sweep_p_out(cfg.n, cfg.k, cfg.mean_degree, p_in);
    SbmParams params = proto;
    params.p_in = p_in;
    params.p_out = p_out;

    std::vector<double> entropies, pvals;
    for (int r = 0; r < cfg.realizations; ++r) {
      const std::uint64_t stream = kPerRealization + gi * 100 + static_cast<std::uint64_t>(r);
      auto [graph, z_unused] = generate_sbm(params, derive_seed(cfg.seed, stream));
      (void)z_unused;
      TestConfig test_cfg;
      test_cfg.n_trials = cfg.n_trials;
      test_cfg.sample_size = cfg.sample_size;
      test_cfg.mode = cfg.mode;
      test_cfg.seed = derive_seed(cfg.seed, kPerRealizationTest + gi * 100 +
                                                static_cast<std::uint64_t>(r));
      const AlignmentResult res = run_test(graph, z_tilde, test_cfg);
      entropies.push_back(res.mean_entropy);
      pvals.push_back(res.p_value);
    }

    auto mean_sd = [](const std::vector<double>& v) {
      double mean = 0.0;
      for (double x_i : v) mean += x_i;
      mean /= static_cast<double>(v.size());
      double var = 0.0;
      for (double x_i : v) var += (x_i - mean) * (x_i - mean);
      var = v.size() > 1 ? var / static_cast<double>(v.size() - 1) : 0.0;
      return std::pair<double, double>(mean, std::sqrt(var));
    };

    SweepRow row;
    row.p_in = p_in;
    row.p_out = p_out;
    row.ratio = p_out > 0.0 ? p_in / p_out : std::numeric_limits<double>::infinity();
    std::tie(row.mean_entropy, row.sd_entropy) = mean_sd(entropies);
    std::tie(row.mean_p, row.sd_p) = mean_sd(pvals);
    rows.push_back(row);
  }
  return rows;
}

MarkersResult run_markers_experiment(const AttributeMatrix& x, const MarkersConfig& cfg) {
  if (x.rows() < 2) throw ValidationError("markers: need at least two rows");
  const AttributeMatrix features = cfg.standardize ? zscore_columns(x) : x;
  const Graph graph = build_knn_graph(features, cfg.knn_k);

  MarkersResult out;
  out.communities = louvain(graph, derive_seed(cfg.seed, kGraphSeed));
  const int k = cfg.n_clusters > 0 ? cfg.n_clusters : out.communities.n_classes;

  const TransitionMatrix t = transition_matrix(graph, cfg.mode);
  out.rows.reserve(static_cast<std::size_t>(x.cols()));
  for (int j = 0; j < x.cols(); ++j) {
    const AttributeMatrix column = extract_column(features, j);
    MarkerRow row;
    row.marker = j;

    std::set<double> distinct(column.data.begin(), column.data.end());
    if (static_cast<int>(distinct.size()) < k) {
      row.warning = "column has " + std::to_string(distinct.size()) +
                    " distinct value(s) for " + std::to_string(k) + " clusters";
    }

    KmeansConfig km;
    km.k = std::min(k, x.rows());
    km.seed = derive_seed(cfg.seed, kPerMarkerCluster + static_cast<std::uint64_t>(j));
    Partition z_marker = kmeans_label(column, km);
    // Keep the class count aligned with the community count for the test.
    z_marker.n_classes = std::max(z_marker.n_classes, k);

    row.nmi_value = nmi(z_marker, out.communities);
    TestConfig test_cfg;
    test_cfg.n_trials = cfg.n_trials;
    test_cfg.sample_size = cfg.sample_size;
    test_cfg.mode = cfg.mode;
    test_cfg.seed = derive_seed(cfg.seed, kPerMarkerTest + static_cast<std::uint64_t>(j));
    const AlignmentResult res = run_test(t, z_marker, test_cfg);
    row.p_value = res.p_value;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace attralign
