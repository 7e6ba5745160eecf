#include "attralign/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "attralign/errors.hpp"

namespace attralign {

Graph Graph::from_edges(int n_nodes, const std::vector<Edge>& edges) {
  if (n_nodes < 0) throw ValidationError("graph: negative node count");
  // Unordered pair -> weight, last duplicate wins.
  std::unordered_map<std::uint64_t, double> weights;
  weights.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.i < 0 || e.i >= n_nodes || e.j < 0 || e.j >= n_nodes) {
      throw ValidationError("graph: edge endpoint out of range: (" +
                            std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
    if (e.i == e.j) {
      throw ValidationError("graph: self-loop at node " + std::to_string(e.i));
    }
    if (e.weight < 0.0) {
      throw ValidationError("graph: negative weight on edge (" +
                            std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
    const int a = std::min(e.i, e.j);
    const int b = std::max(e.i, e.j);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    weights[key] = e.weight;
  }
  Graph g(n_nodes);
  g.n_edges_ = weights.size();
  for (const auto& [key, w] : weights) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffull);
    g.adj_[static_cast<std::size_t>(a)].emplace_back(b, w);
    g.adj_[static_cast<std::size_t>(b)].emplace_back(a, w);
    g.total_weight_ += w;
  }
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
  }
  return g;
}

double Graph::degree(int i) const {
  if (i < 0 || i >= n_nodes()) {
    throw ValidationError("degree: node index " + std::to_string(i) +
                          " out of range [0, " + std::to_string(n_nodes()) + ")");
  }
  double d = 0.0;
  for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)]) d += w;
  return d;
}

double Graph::weight(int i, int j) const {
  const auto& row = adj_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const std::pair<int, double>& e, int col) {
                               return e.first < col;
                             });
  if (it != row.end() && it->first == j) return it->second;
  return 0.0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges_);
  for (int i = 0; i < n_nodes(); ++i) {
    for (const auto& [j, w] : adj_[static_cast<std::size_t>(i)]) {
      if (i < j) out.push_back({i, j, w});
    }
  }
  return out;
}

Partition::Partition(std::vector<int> labels_in, int n_classes_in)
    : labels(std::move(labels_in)), n_classes(n_classes_in) {
  if (labels.empty()) throw ValidationError("partition: empty label vector");
  if (n_classes < 1) throw ValidationError("partition: n_classes must be >= 1");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= n_classes) {
      throw ValidationError("partition: label " + std::to_string(labels[i]) +
                            " at position " + std::to_string(i) +
                            " outside [0, " + std::to_string(n_classes) + ")");
    }
  }
}

Partition Partition::from_labels(std::vector<int> labels_in) {
  if (labels_in.empty()) throw ValidationError("partition: empty label vector");
  int max_label = 0;
  for (int v : labels_in) max_label = std::max(max_label, v);
  return Partition(std::move(labels_in), max_label + 1);
}

NodeSample make_node_sample(int n, std::vector<int> labeled) {
  const int l = static_cast<int>(labeled.size());
  if (l < 1 || l > n - 1) {
    throw ValidationError("node sample: need 1 <= l <= N-1, got l=" +
                          std::to_string(l) + " with N=" + std::to_string(n));
  }
  std::sort(labeled.begin(), labeled.end());
  std::vector<bool> is_labeled(static_cast<std::size_t>(n), false);
  for (int v : labeled) {
    if (v < 0 || v >= n) {
      throw ValidationError("node sample: index " + std::to_string(v) + " out of range");
    }
    if (is_labeled[static_cast<std::size_t>(v)]) {
      throw ValidationError("node sample: duplicate index " + std::to_string(v));
    }
    is_labeled[static_cast<std::size_t>(v)] = true;
  }
  NodeSample s;
  s.labeled = std::move(labeled);
  s.unlabeled.reserve(static_cast<std::size_t>(n - l));
  for (int i = 0; i < n; ++i) {
    if (!is_labeled[static_cast<std::size_t>(i)]) s.unlabeled.push_back(i);
  }
  return s;
}

NodeSample sample_node_split(int n, int l, Rng& rng) {
  return make_node_sample(n, rng.sample_indices(n, l));
}

}  // namespace attralign
