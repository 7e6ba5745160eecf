#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/labelprop.hpp"

namespace attralign {

struct TestConfig {
  int n_trials = 1000;
  int sample_size = 100;
  std::uint64_t seed = 0;
  TransitionMode mode = TransitionMode::kAsWritten;
  PropagateOptions propagate;
};

struct TrialResult {
  double entropy = 0.0;
  double null_entropy = 0.0;
  std::vector<std::string> warnings;
};

// One trial: draw a labeled sample, propagate the true labels and score the
// unlabeled predictions; then shuffle the labels within the same labeled
// sample, propagate again, and score against the same unlabeled ground truth.
TrialResult run_trial(const TransitionMatrix& t, const Partition& z_tilde,
                      int sample_size, std::uint64_t trial_seed,
                      const PropagateOptions& opts = {});

struct AlignmentResult {
  std::vector<double> entropies;
  std::vector<double> null_entropies;
  double p_value = 0.0;
  double mean_entropy = 0.0;
  double mean_null_entropy = 0.0;
  // Diagnostic overlap statistic P(E < E_perm) over all trial pairs, reported
  // alongside the p-value but never substituted for it.
  double mann_whitney_auc = 0.0;
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;
  int n_trials = 0;
  int sample_size = 0;
};

// Runs n_trials independent trials with per-trial derived seeds and computes
// the empirical p-value. Trials run in parallel; results are identical to
// sequential execution.
AlignmentResult run_test(const TransitionMatrix& t, const Partition& z_tilde,
                         const TestConfig& cfg);
AlignmentResult run_test(const Graph& g, const Partition& z_tilde, const TestConfig& cfg);

// Fraction of null entropies strictly below max(entropies); ties count as not
// less.
double empirical_p(const std::vector<double>& entropies,
                   const std::vector<double>& null_entropies);

// P(E < E_perm) + 0.5 P(E = E_perm) over all pairs.
double mann_whitney_auc(const std::vector<double>& entropies,
                        const std::vector<double>& null_entropies);

}  // namespace attralign
