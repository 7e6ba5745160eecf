#pragma once

#include <cstdint>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// Inter-community edge counts over ordered community pairs: the diagonal
// counts each within-community edge twice (once per orientation), the
// off-diagonal cells count each edge once per orientation. sizes[r] is the
// number of nodes in community r.
struct BlockStats {
  Matrix m;  // K x K, symmetric
  std::vector<int> sizes;

  double density(int r, int s) const {
    return m(r, s) / (static_cast<double>(sizes[static_cast<std::size_t>(r)]) *
                      static_cast<double>(sizes[static_cast<std::size_t>(s)]));
  }
};

BlockStats block_stats(const Graph& g, const Partition& z_tilde);

// Blockmodel entropy of the partition:
//   -1/2 sum_rs [ m_rs log w_rs + (n_r n_s - m_rs) log(1 - w_rs) ]
// with w_rs = m_rs / (n_r n_s), natural logs, 0 log 0 := 0 at w in {0, 1}.
double bestest_entropy(const BlockStats& stats);

// Permutation test: fraction of uniformly relabeled partitions whose entropy
// falls strictly below the observed one. Permutations run in parallel on
// derived seeds.
double bestest_pvalue(const Graph& g, const Partition& z_tilde, int n_perms,
                      std::uint64_t seed);

}  // namespace attralign
