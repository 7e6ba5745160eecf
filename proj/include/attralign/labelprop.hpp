#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// Probabilities below this floor are clamped before logs are taken, bounding
// the per-node entropy contribution at about 27.6 nats.
inline constexpr double kProbFloor = 1e-12;

enum class TransitionMode {
  // Column-normalize the adjacency, then row-normalize the result. The two
  // normalizations coincide on regular graphs but differ in general.
  kAsWritten,
  // Plain random-walk matrix: row-normalize the adjacency directly.
  kRandomWalk,
};

// Row-stochastic propagation matrix; rows sum to 1 within 1e-10.
struct TransitionMatrix {
  int n = 0;
  SparseMatrix t_bar;
};

// Throws ValidationError naming the offending nodes when any node has zero
// degree.
TransitionMatrix transition_matrix(const Graph& g,
                                   TransitionMode mode = TransitionMode::kAsWritten);

// The transition matrix reordered so labeled nodes come first, split into four
// blocks after labeled row/column l.
struct BlockSplit {
  SparseMatrix t_ll;  // l x l
  SparseMatrix t_lu;  // l x u
  SparseMatrix t_ul;  // u x l
  SparseMatrix t_uu;  // u x u
  NodeSample sample;
};

BlockSplit split_blocks(const TransitionMatrix& t, NodeSample sample);

// One-hot indicator rows for the given labels.
LabelDistribution one_hot(std::span<const int> labels, int n_classes);

struct PropagateOptions {
  // Direct dense factorization up to this many unlabeled nodes, fixed-point
  // iteration beyond it.
  int dense_cutover = 4000;
  double fp_tol = 1e-10;
  long fp_max_iters = 100000;
};

struct PropagateResult {
  LabelDistribution y_u;
  std::vector<std::string> warnings;
  int n_unreachable = 0;
};

// Solves (I - T_uu) Y_U = T_ul Y_L. The factorization is done once at
// construction so several label matrices can be propagated over the same
// split (the true and the permuted-null task of one trial). Unlabeled nodes
// with no path to any labeled node make the system singular; their rows are
// assigned the uniform distribution and a warning is attached.
class HarmonicSolver {
 public:
  explicit HarmonicSolver(const BlockSplit& blocks, PropagateOptions opts = {});
  ~HarmonicSolver();
  HarmonicSolver(HarmonicSolver&&) noexcept;
  HarmonicSolver(const HarmonicSolver&) = delete;
  HarmonicSolver& operator=(const HarmonicSolver&) = delete;

  PropagateResult solve(const LabelDistribution& y_l) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Single-shot convenience wrapper around HarmonicSolver. Output rows are
// clamped to [kProbFloor, 1] and renormalized to sum 1.
PropagateResult propagate(const BlockSplit& blocks, const LabelDistribution& y_l,
                          PropagateOptions opts = {});

// Cross entropy -sum_ic z_ic log(y_ic) with natural logs, summed (not
// averaged) over rows. Entries of y are clamped at kProbFloor before the log.
double cross_entropy(const LabelDistribution& z_one_hot, const LabelDistribution& y);

}  // namespace attralign
