#include "attralign/aligntest.hpp"

#include <algorithm>
#include <cmath>

#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign {

TrialResult run_trial(const TransitionMatrix& t, const Partition& z_tilde,
                      int sample_size, std::uint64_t trial_seed,
                      const PropagateOptions& opts) {
  const int n = t.n;
  if (z_tilde.size() != n) {
    throw ValidationError("run_trial: partition length " + std::to_string(z_tilde.size()) +
                          " does not match graph size " + std::to_string(n));
  }
  const int k = z_tilde.n_classes;
  Rng rng(trial_seed);
  BlockSplit blocks = split_blocks(t, sample_node_split(n, sample_size, rng));
  const auto& labeled = blocks.sample.labeled;
  const auto& unlabeled = blocks.sample.unlabeled;

  std::vector<int> z_l(labeled.size());
  for (std::size_t p = 0; p < labeled.size(); ++p) {
    z_l[p] = z_tilde.labels[static_cast<std::size_t>(labeled[p])];
  }
  std::vector<int> z_u(unlabeled.size());
  for (std::size_t p = 0; p < unlabeled.size(); ++p) {
    z_u[p] = z_tilde.labels[static_cast<std::size_t>(unlabeled[p])];
  }

  TrialResult out;
  {
    std::vector<char> present(static_cast<std::size_t>(k), 0);
    for (int c : z_l) present[static_cast<std::size_t>(c)] = 1;
    std::string absent;
    for (int c = 0; c < k; ++c) {
      if (!present[static_cast<std::size_t>(c)]) {
        absent += (absent.empty() ? "" : ", ") + std::to_string(c);
      }
    }
    if (!absent.empty()) {
      out.warnings.push_back("class(es) " + absent + " absent from the labeled sample");
    }
  }

  const LabelDistribution z_u_hot = one_hot(z_u, k);
  HarmonicSolver solver(blocks, opts);

  PropagateResult true_run = solver.solve(one_hot(z_l, k));
  out.entropy = cross_entropy(z_u_hot, true_run.y_u);

  // Null task: permute the labels within the labeled sample, keep the sample
  // and the unlabeled ground truth fixed.
  rng.shuffle(z_l);
  PropagateResult null_run = solver.solve(one_hot(z_l, k));
  out.null_entropy = cross_entropy(z_u_hot, null_run.y_u);

  for (auto& w : true_run.warnings) out.warnings.push_back(std::move(w));
  return out;
}

AlignmentResult run_test(const TransitionMatrix& t, const Partition& z_tilde,
                         const TestConfig& cfg) {
  const int n = t.n;
  if (cfg.n_trials < 1) throw ValidationError("run_test: need at least one trial");
  if (cfg.sample_size < 1 || cfg.sample_size > n - 1) {
    throw ValidationError("run_test: sample size must lie in [1, N-1]");
  }
  if (z_tilde.size() != n) {
    throw ValidationError("run_test: partition length does not match graph size");
  }

  AlignmentResult res;
  res.seed = cfg.seed;
  res.n_trials = cfg.n_trials;
  res.sample_size = cfg.sample_size;
  res.entropies.resize(static_cast<std::size_t>(cfg.n_trials));
  res.null_entropies.resize(static_cast<std::size_t>(cfg.n_trials));

  bool single_class = true;
  for (int v : z_tilde.labels) {
    if (v != z_tilde.labels[0]) {
      single_class = false;
      break;
    }
  }
  if (single_class) {
    res.warnings.push_back(
        "partition has a single class; entropies are identically zero and the "
        "test is degenerate");
  }

  std::vector<std::vector<std::string>> trial_warnings(
      static_cast<std::size_t>(cfg.n_trials));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.n_trials; ++i) {
    TrialResult r = run_trial(t, z_tilde, cfg.sample_size,
                              derive_seed(cfg.seed, static_cast<std::uint64_t>(i)),
                              cfg.propagate);
    res.entropies[static_cast<std::size_t>(i)] = r.entropy;
    res.null_entropies[static_cast<std::size_t>(i)] = r.null_entropy;
    trial_warnings[static_cast<std::size_t>(i)] = std::move(r.warnings);
  }
  for (int i = 0; i < cfg.n_trials; ++i) {
    for (auto& w : trial_warnings[static_cast<std::size_t>(i)]) {
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

AlignmentResult run_test(const Graph& g, const Partition& z_tilde, const TestConfig& cfg) {
  return run_test(transition_matrix(g, cfg.mode), z_tilde, cfg);
}

double empirical_p(const std::vector<double>& entropies,
                   const std::vector<double>& null_entropies) {
  if (entropies.empty() || null_entropies.empty()) {
    throw ValidationError("empirical_p: empty entropy distribution");
  }
  const double max_e = *std::max_element(entropies.begin(), entropies.end());
  std::size_t below = 0;
  for (double v : null_entropies) {
    if (v < max_e) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(null_entropies.size());
}

double mann_whitney_auc(const std::vector<double>& entropies,
                        const std::vector<double>& null_entropies) {
  if (entropies.empty() || null_entropies.empty()) {
    throw ValidationError("mann_whitney_auc: empty entropy distribution");
  }
  // Sort-based count of pairs with E < E_perm (+ half ties).
  std::vector<double> e = entropies;
  std::vector<double> p = null_entropies;
  std::sort(e.begin(), e.end());
  std::sort(p.begin(), p.end());
  double wins = 0.0;
  for (double v : e) {
    const auto lo = std::lower_bound(p.begin(), p.end(), v);
    const auto hi = std::upper_bound(lo, p.end(), v);
    wins += static_cast<double>(p.end() - hi) + 0.5 * static_cast<double>(hi - lo);
  }
  return wins / (static_cast<double>(e.size()) * static_cast<double>(p.size()));
}

}  // namespace attralign
