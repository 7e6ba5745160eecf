#include "attralign/knn.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "attralign/errors.hpp"

namespace attralign {

namespace {

double squared_distance(const AttributeMatrix& x, int a, int b) {
  double d = 0.0;
  for (int c = 0; c < x.cols(); ++c) {
    const double diff = x(a, c) - x(b, c);
    d += diff * diff;
  }
  return d;
}

}  // namespace

Graph build_knn_graph(const AttributeMatrix& x, int k) {
  const int n = x.rows();
  if (k < 1) throw ValidationError("knn: k must be >= 1");
  if (k >= n) {
    throw ValidationError("knn: k=" + std::to_string(k) +
                          " must be smaller than N=" + std::to_string(n));
  }
  for (double v : x.data) {
    if (!std::isfinite(v)) throw ValidationError("knn: non-finite attribute value");
  }

  std::vector<std::vector<int>> nn(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> dist;
    dist.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      dist.emplace_back(squared_distance(x, i, j), j);
    }
    std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
    std::sort(dist.begin(), dist.begin() + k);
    auto& row = nn[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) row.push_back(dist[static_cast<std::size_t>(t)].second);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    for (int j : nn[static_cast<std::size_t>(i)]) edges.push_back({i, j, 1.0});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace attralign
