#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "attralign/rng.hpp"

namespace attralign {

struct Edge {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

// Undirected weighted graph over nodes [0, N). Adjacency is stored in both
// directions, sorted by neighbor index. No self-loops, weights >= 0.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_nodes) : adj_(static_cast<std::size_t>(n_nodes)) {}

  // Builds a graph from an edge list. Edges are undirected; a duplicate of
  // the same unordered pair overwrites the earlier weight (last one wins).
  // Throws ValidationError on self-loops, negative weights, or out-of-range
  // endpoints.
  static Graph from_edges(int n_nodes, const std::vector<Edge>& edges);

  int n_nodes() const { return static_cast<int>(adj_.size()); }
  std::size_t n_edges() const { return n_edges_; }

  // Sum of incident edge weights. Throws on an out-of-range index.
  double degree(int i) const;

  const std::vector<std::pair<int, double>>& neighbors(int i) const {
    return adj_[static_cast<std::size_t>(i)];
  }

  // Weight of edge (i, j); 0 when absent.
  double weight(int i, int j) const;

  // Edge list with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Sum of all edge weights (each undirected edge counted once).
  double total_weight() const { return total_weight_; }

 private:
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::size_t n_edges_ = 0;
  double total_weight_ = 0.0;
};

// Node-to-community assignment. Labels lie in [0, n_classes); classes may be
// empty (n_classes is an upper bound, not a census).
struct Partition {
  std::vector<int> labels;
  int n_classes = 0;

  Partition() = default;
  // Validates labels against n_classes; throws ValidationError on an empty
  // label vector, n_classes < 1, or out-of-range labels.
  Partition(std::vector<int> labels_in, int n_classes_in);

  // n_classes = 1 + max label.
  static Partition from_labels(std::vector<int> labels_in);

  int size() const { return static_cast<int>(labels.size()); }
};

// Disjoint labeled/unlabeled index sets covering [0, N), both sorted.
struct NodeSample {
  std::vector<int> labeled;
  std::vector<int> unlabeled;
};

// Builds a NodeSample from the labeled set (complement becomes unlabeled).
// Requires 1 <= l <= n-1, indices valid and distinct.
NodeSample make_node_sample(int n, std::vector<int> labeled);

// Draws l labeled nodes uniformly without replacement.
NodeSample sample_node_split(int n, int l, Rng& rng);

}  // namespace attralign
