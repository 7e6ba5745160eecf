#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/labelprop.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// Label-perturbation experiment: one SBM + Gaussian-attribute dataset, the
// attribute partition permuted by increasing fractions, the alignment test run
// at every fraction. The blockmodel entropy of each perturbed partition is
// reported alongside for baseline comparison.
struct PerturbConfig {
  int n = 200;
  int k = 4;
  double p_in = 0.6;
  double p_out = 0.02;
  int attr_dims = 3;
  double mean_scale = 1.0;
  std::vector<double> fractions = {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int sample_size = 100;
  int n_trials = 1000;
  std::uint64_t seed = 0;
  TransitionMode mode = TransitionMode::kAsWritten;
};

struct PerturbRow {
  double fraction = 0.0;
  double mean_entropy = 0.0;
  double p_value = 0.0;
  double bestest_entropy = 0.0;
};

std::vector<PerturbRow> run_perturb_experiment(const PerturbConfig& cfg);

// Community-strength sweep: p_in varies over a grid, p_out follows from the
// mean-degree constraint, and each parameter pair gets several graph
// realizations over one fixed attribute matrix and planted partition.
struct SweepConfig {
  int n = 200;
  int k = 4;
  std::vector<double> p_in_grid = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45};
  double mean_degree = 30.0;
  int realizations = 10;
  int attr_dims = 3;
  double mean_scale = 1.0;
  int sample_size = 100;
  int n_trials = 100;
  std::uint64_t seed = 0;
  TransitionMode mode = TransitionMode::kAsWritten;
};

struct SweepRow {
  double p_in = 0.0;
  double p_out = 0.0;
  double ratio = 0.0;
  double mean_entropy = 0.0;
  double sd_entropy = 0.0;
  double mean_p = 0.0;
  double sd_p = 0.0;
};

// p_out such that the expected mean degree hits the target for equal blocks of
// n/k nodes: p_out = (d - p_in (n/k - 1)) / (n - n/k).
double sweep_p_out(int n, int k, double mean_degree, double p_in);

std::vector<SweepRow> run_sweep_experiment(const SweepConfig& cfg);

// Marker scan: build one k-NN graph over all features, detect communities with
// Louvain, then test every feature column's induced partition against them.
struct MarkersConfig {
  int knn_k = 5;
  int n_clusters = 0;  // 0: use the detected community count
  int sample_size = 500;
  int n_trials = 30;
  std::uint64_t seed = 0;
  TransitionMode mode = TransitionMode::kAsWritten;
  bool standardize = false;
};

struct MarkerRow {
  int marker = 0;
  double nmi_value = 0.0;
  double p_value = 0.0;
  std::string warning;
};

struct MarkersResult {
  Partition communities;
  std::vector<MarkerRow> rows;
};

MarkersResult run_markers_experiment(const AttributeMatrix& x, const MarkersConfig& cfg);

}  // namespace attralign
