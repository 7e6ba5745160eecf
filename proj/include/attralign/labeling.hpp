#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

struct KmeansConfig {
  int k = 1;
  int max_iters = 300;
  int n_restarts = 10;
  std::uint64_t seed = 0;
};

// Lloyd's algorithm with k-means++ seeding, best of n_restarts by
// within-cluster sum of squares. Deterministic given the seed; restarts run
// concurrently on their own derived streams. Empty clusters are repaired by
// reassigning the point farthest from its current centroid.
Partition kmeans_label(const AttributeMatrix& x, const KmeansConfig& cfg);

// Maps distinct values to consecutive class indices in order of first
// appearance.
template <typename T>
Partition discrete_label(const std::vector<T>& column) {
  std::vector<int> labels(column.size());
  std::map<T, int> index_of;
  int next = 0;
  for (std::size_t i = 0; i < column.size(); ++i) {
    auto it = index_of.find(column[i]);
    if (it == index_of.end()) {
      it = index_of.emplace(column[i], next++).first;
    }
    labels[i] = it->second;
  }
  return Partition(std::move(labels), next);
}

// Normalized mutual information 2 I(a;b) / (H(a) + H(b)) with natural-log
// entropies. Returns 1 when both partitions have zero entropy, 0 when the
// mutual information vanishes.
double nmi(const Partition& a, const Partition& b);

// Column-wise z-scoring; constant columns are left centered at zero.
AttributeMatrix zscore_columns(const AttributeMatrix& x);

// Extracts column j as an N x 1 matrix (for single-marker clustering).
AttributeMatrix extract_column(const AttributeMatrix& x, int j);

}  // namespace attralign
