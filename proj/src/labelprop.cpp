#include "attralign/labelprop.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "attralign/errors.hpp"

namespace attralign {

TransitionMatrix transition_matrix(const Graph& g, TransitionMode mode) {
  const int n = g.n_nodes();
  if (n == 0) throw ValidationError("transition matrix: empty graph");
  std::vector<double> deg(static_cast<std::size_t>(n));
  std::string zero_nodes;
  int n_zero = 0;
  for (int i = 0; i < n; ++i) {
    deg[static_cast<std::size_t>(i)] = g.degree(i);
    if (deg[static_cast<std::size_t>(i)] <= 0.0) {
      if (n_zero < 8) {
        zero_nodes += (n_zero ? ", " : "") + std::to_string(i);
      }
      ++n_zero;
    }
  }
  if (n_zero > 0) {
    throw ValidationError("transition matrix: " + std::to_string(n_zero) +
                          " zero-degree node(s): " + zero_nodes +
                          (n_zero > 8 ? ", ..." : ""));
  }

  TransitionMatrix t;
  t.n = n;
  t.t_bar = SparseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    auto& row = t.t_bar.entries[static_cast<std::size_t>(i)];
    const auto& nbrs = g.neighbors(i);
    row.reserve(nbrs.size());
    double row_sum = 0.0;
    for (const auto& [j, w] : nbrs) {
      const double v = mode == TransitionMode::kAsWritten
                           ? w / deg[static_cast<std::size_t>(j)]  // column-normalized entry
                           : w / deg[static_cast<std::size_t>(i)];
      row.emplace_back(j, v);
      row_sum += v;
    }
    if (mode == TransitionMode::kAsWritten) {
      for (auto& [j, v] : row) v /= row_sum;
    }
  }
  return t;
}

BlockSplit split_blocks(const TransitionMatrix& t, NodeSample sample) {
  const int n = t.n;
  const int l = static_cast<int>(sample.labeled.size());
  const int u = static_cast<int>(sample.unlabeled.size());
  if (l + u != n) throw ValidationError("split_blocks: sample does not cover the graph");

  // block_of[node] = 0 for labeled, 1 for unlabeled; pos_of[node] = index
  // within its block. Both index sets are sorted, so remapped entries stay
  // sorted within each block.
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<int> pos_of(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < l; ++p) {
    block_of[static_cast<std::size_t>(sample.labeled[static_cast<std::size_t>(p)])] = 0;
    pos_of[static_cast<std::size_t>(sample.labeled[static_cast<std::size_t>(p)])] = p;
  }
  for (int p = 0; p < u; ++p) {
    block_of[static_cast<std::size_t>(sample.unlabeled[static_cast<std::size_t>(p)])] = 1;
    pos_of[static_cast<std::size_t>(sample.unlabeled[static_cast<std::size_t>(p)])] = p;
  }
  for (int i = 0; i < n; ++i) {
    if (block_of[static_cast<std::size_t>(i)] < 0) {
      throw ValidationError("split_blocks: node " + std::to_string(i) +
                            " missing from the sample");
    }
  }

  BlockSplit out;
  out.t_ll = SparseMatrix(l, l);
  out.t_lu = SparseMatrix(l, u);
  out.t_ul = SparseMatrix(u, l);
  out.t_uu = SparseMatrix(u, u);
  for (int i = 0; i < n; ++i) {
    const int bi = block_of[static_cast<std::size_t>(i)];
    const int pi = pos_of[static_cast<std::size_t>(i)];
    for (const auto& [j, v] : t.t_bar.row(i)) {
      const int bj = block_of[static_cast<std::size_t>(j)];
      const int pj = pos_of[static_cast<std::size_t>(j)];
      SparseMatrix& dst = bi == 0 ? (bj == 0 ? out.t_ll : out.t_lu)
                                  : (bj == 0 ? out.t_ul : out.t_uu);
      dst.entries[static_cast<std::size_t>(pi)].emplace_back(pj, v);
    }
  }
  out.sample = std::move(sample);
  return out;
}

LabelDistribution one_hot(std::span<const int> labels, int n_classes) {
  LabelDistribution y(static_cast<int>(labels.size()), n_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int c = labels[i];
    if (c < 0 || c >= n_classes) {
      throw ValidationError("one_hot: label " + std::to_string(c) + " outside [0, " +
                            std::to_string(n_classes) + ")");
    }
    y(static_cast<int>(i), c) = 1.0;
  }
  return y;
}

namespace {

void clamp_and_normalize_rows(Matrix& y) {
  for (int i = 0; i < y.rows(); ++i) {
    double sum = 0.0;
    for (int c = 0; c < y.cols(); ++c) {
      double v = y(i, c);
      v = std::clamp(v, kProbFloor, 1.0);
      y(i, c) = v;
      sum += v;
    }
    for (int c = 0; c < y.cols(); ++c) y(i, c) /= sum;
  }
}

}  // namespace

struct HarmonicSolver::Impl {
  const SparseMatrix* t_ul = nullptr;
  const SparseMatrix* t_uu = nullptr;
  int n_unlabeled = 0;
  int n_labeled = 0;
  PropagateOptions opts;

  // Unlabeled nodes with a walk to some labeled node; the harmonic system is
  // nonsingular exactly on this set.
  std::vector<int> reachable;
  std::vector<int> reach_pos;  // unlabeled index -> position in `reachable`, or -1
  bool use_dense = false;
  Matrix lu;
  std::vector<int> piv;
};

HarmonicSolver::HarmonicSolver(const BlockSplit& blocks, PropagateOptions opts)
    : impl_(new Impl) {
  impl_->t_ul = &blocks.t_ul;
  impl_->t_uu = &blocks.t_uu;
  impl_->n_unlabeled = blocks.t_uu.n_rows;
  impl_->n_labeled = blocks.t_ul.n_cols;
  impl_->opts = opts;

  const int m = impl_->n_unlabeled;
  // BFS from every unlabeled node with a labeled neighbor, through the
  // (structurally symmetric) t_uu pattern.
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::deque<int> queue;
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, v] : blocks.t_ul.row(i)) {
      (void)j;
      if (v > 0.0) {
        seen[static_cast<std::size_t>(i)] = 1;
        queue.push_back(i);
        break;
      }
    }
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (const auto& [j, v] : blocks.t_uu.row(i)) {
      if (v > 0.0 && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        queue.push_back(j);
      }
    }
  }
  impl_->reach_pos.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (seen[static_cast<std::size_t>(i)]) {
      impl_->reach_pos[static_cast<std::size_t>(i)] = static_cast<int>(impl_->reachable.size());
      impl_->reachable.push_back(i);
    }
  }

  const int r = static_cast<int>(impl_->reachable.size());
  impl_->use_dense = r <= opts.dense_cutover;
  if (impl_->use_dense && r > 0) {
    Matrix a(r, r);
    for (int ri = 0; ri < r; ++ri) a(ri, ri) = 1.0;
    for (int ri = 0; ri < r; ++ri) {
      const int i = impl_->reachable[static_cast<std::size_t>(ri)];
      for (const auto& [j, v] : blocks.t_uu.row(i)) {
        const int rj = impl_->reach_pos[static_cast<std::size_t>(j)];
        if (rj >= 0) a(ri, rj) -= v;
      }
    }
    if (!lu_factor(a, impl_->piv)) {
      throw NumericalError("harmonic solve: singular system on the reachable set");
    }
    impl_->lu = std::move(a);
  }
}

HarmonicSolver::~HarmonicSolver() = default;
HarmonicSolver::HarmonicSolver(HarmonicSolver&&) noexcept = default;

PropagateResult HarmonicSolver::solve(const LabelDistribution& y_l) const {
  const Impl& im = *impl_;
  if (y_l.rows() != im.n_labeled) {
    throw ValidationError("propagate: Y_L has " + std::to_string(y_l.rows()) +
                          " rows, expected " + std::to_string(im.n_labeled));
  }
  const int m = im.n_unlabeled;
  const int k = y_l.cols();
  const int r = static_cast<int>(im.reachable.size());

  // rhs = T_ul Y_L restricted to reachable rows.
  Matrix rhs(r, k);
  for (int ri = 0; ri < r; ++ri) {
    const int i = im.reachable[static_cast<std::size_t>(ri)];
    for (const auto& [j, v] : im.t_ul->row(i)) {
      for (int c = 0; c < k; ++c) rhs(ri, c) += v * y_l(j, c);
    }
  }

  if (r > 0) {
    if (im.use_dense) {
      lu_solve(im.lu, im.piv, rhs);
    } else {
      // Fixed point Y <- T_uu Y + T_ul Y_L on the reachable set.
      Matrix y(r, k, 1.0 / k);
      Matrix next(r, k);
      bool converged = false;
      for (long it = 0; it < im.opts.fp_max_iters; ++it) {
        double diff = 0.0, scale = 1.0;
        for (int ri = 0; ri < r; ++ri) {
          const int i = im.reachable[static_cast<std::size_t>(ri)];
          for (int c = 0; c < k; ++c) next(ri, c) = rhs(ri, c);
          for (const auto& [j, v] : im.t_uu->row(i)) {
            const int rj = im.reach_pos[static_cast<std::size_t>(j)];
            if (rj < 0) continue;
            for (int c = 0; c < k; ++c) next(ri, c) += v * y(rj, c);
          }
          for (int c = 0; c < k; ++c) {
            diff = std::max(diff, std::fabs(next(ri, c) - y(ri, c)));
            scale = std::max(scale, std::fabs(next(ri, c)));
          }
        }
        y.data.swap(next.data);
        if (diff <= im.opts.fp_tol * scale) {
          converged = true;
          break;
        }
      }
      if (!converged) {
        throw NumericalError("harmonic solve: fixed-point iteration did not converge in " +
                             std::to_string(im.opts.fp_max_iters) + " steps");
      }
      rhs = std::move(y);
    }
  }

  PropagateResult out;
  out.y_u = LabelDistribution(m, k, 1.0 / k);
  for (int ri = 0; ri < r; ++ri) {
    const int i = im.reachable[static_cast<std::size_t>(ri)];
    for (int c = 0; c < k; ++c) out.y_u(i, c) = rhs(ri, c);
  }
  out.n_unreachable = m - r;
  if (out.n_unreachable > 0) {
    out.warnings.push_back(std::to_string(out.n_unreachable) +
                           " unlabeled node(s) unreachable from the labeled set; "
                           "assigned the uniform distribution");
  }
  clamp_and_normalize_rows(out.y_u);
  return out;
}

PropagateResult propagate(const BlockSplit& blocks, const LabelDistribution& y_l,
                          PropagateOptions opts) {
  return HarmonicSolver(blocks, opts).solve(y_l);
}

double cross_entropy(const LabelDistribution& z_one_hot, const LabelDistribution& y) {
  if (z_one_hot.rows() != y.rows() || z_one_hot.cols() != y.cols()) {
    throw ValidationError("cross_entropy: shape mismatch");
  }
  double e = 0.0;
  for (int i = 0; i < y.rows(); ++i) {
    for (int c = 0; c < y.cols(); ++c) {
      const double z = z_one_hot(i, c);
      if (z > 0.0) {
        e -= z * std::log(std::max(y(i, c), kProbFloor));
      }
    }
  }
  return e;
}

}  // namespace attralign
