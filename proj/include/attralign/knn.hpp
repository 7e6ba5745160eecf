#pragma once

#include "attralign/graph.hpp"
#include "attralign/matrix.hpp"

namespace attralign {

// k-nearest-neighbor graph under Euclidean distance over all feature columns.
// Each node is linked to its k nearest neighbors with weight 1.0 and the
// result is symmetrized by union (an edge exists if either endpoint selected
// the other). Distance ties break toward the lower node index. The O(N^2)
// distance scan is parallelized over query nodes.
Graph build_knn_graph(const AttributeMatrix& x, int k);

}  // namespace attralign
