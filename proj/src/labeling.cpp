#include "attralign/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign {

namespace {

double sq_dist(const Matrix& x, int row, const std::vector<double>& center) {
  double d = 0.0;
  for (int c = 0; c < x.cols(); ++c) {
    const double diff = x(row, c) - center[static_cast<std::size_t>(c)];
    d += diff * diff;
  }
  return d;
}

struct KmeansRun {
  std::vector<int> labels;
  double wcss = 0.0;
};

std::vector<std::vector<double>> kmeanspp_init(const Matrix& x, int k, Rng& rng) {
  const int n = x.rows();
  const int p = x.cols();
  std::vector<std::vector<double>> centers;
  centers.reserve(static_cast<std::size_t>(k));

  auto point = [&](int i) {
    std::vector<double> c(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j)] = x(i, j);
    return c;
  };

  centers.push_back(point(rng.uniform_int(n)));
  std::vector<double> min_d2(static_cast<std::size_t>(n));
  while (static_cast<int>(centers.size()) < k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double best = sq_dist(x, i, centers[0]);
      for (std::size_t c = 1; c < centers.size(); ++c) {
        best = std::min(best, sq_dist(x, i, centers[c]));
      }
      min_d2[static_cast<std::size_t>(i)] = best;
      total += best;
    }
    int chosen;
    if (total <= 0.0) {
      // Only duplicates of existing centers remain.
      chosen = rng.uniform_int(n);
    } else {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      chosen = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += min_d2[static_cast<std::size_t>(i)];
        if (u < acc) {
          chosen = i;
          break;
        }
      }
    }
    centers.push_back(point(chosen));
  }
  return centers;
}

// Moves one point into each empty cluster: the point farthest from its current
// centroid among clusters that can spare a member, ties toward the lower point
// index. Deterministic, so repeated repairs stabilize.
void repair_empty_clusters(const Matrix& x, std::vector<std::vector<double>>& centers,
                           std::vector<int>& assign, std::vector<int>& counts) {
  const int k = static_cast<int>(centers.size());
  const int n = x.rows();
  for (int c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) continue;
    int best_point = -1;
    double best_d = -1.0;
    for (int i = 0; i < n; ++i) {
      const int a = assign[static_cast<std::size_t>(i)];
      if (counts[static_cast<std::size_t>(a)] < 2) continue;
      const double d = sq_dist(x, i, centers[static_cast<std::size_t>(a)]);
      if (d > best_d) {
        best_d = d;
        best_point = i;
      }
    }
    if (best_point < 0) continue;  // nothing can be spared
    const int old = assign[static_cast<std::size_t>(best_point)];
    counts[static_cast<std::size_t>(old)]--;
    counts[static_cast<std::size_t>(c)]++;
    assign[static_cast<std::size_t>(best_point)] = c;
    for (int j = 0; j < x.cols(); ++j) {
      centers[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = x(best_point, j);
    }
  }
}

KmeansRun lloyd(const Matrix& x, int k, int max_iters, std::uint64_t seed) {
  const int n = x.rows();
  const int p = x.cols();
  Rng rng(seed);
  auto centers = kmeanspp_init(x, k, rng);

  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  std::vector<int> prev;
  std::vector<int> counts(static_cast<std::size_t>(k), 0);

  for (int iter = 0; iter < max_iters; ++iter) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < n; ++i) {
      int best_c = 0;
      double best_d = sq_dist(x, i, centers[0]);
      for (int c = 1; c < k; ++c) {
        const double d = sq_dist(x, i, centers[static_cast<std::size_t>(c)]);
        if (d < best_d) {
          best_d = d;
          best_c = c;
        }
      }
      assign[static_cast<std::size_t>(i)] = best_c;
      counts[static_cast<std::size_t>(best_c)]++;
    }
    repair_empty_clusters(x, centers, assign, counts);
    if (assign == prev) break;
    prev = assign;
    // Update step.
    for (auto& c : centers) std::fill(c.begin(), c.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      auto& c = centers[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
      for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j)] += x(i, j);
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        for (double& v : centers[static_cast<std::size_t>(c)]) {
          v /= counts[static_cast<std::size_t>(c)];
        }
      }
    }
  }

  // Final centroids from the final assignment, then the objective.
  for (auto& c : centers) std::fill(c.begin(), c.end(), 0.0);
  std::fill(counts.begin(), counts.end(), 0);
  for (int i = 0; i < n; ++i) {
    const int a = assign[static_cast<std::size_t>(i)];
    counts[static_cast<std::size_t>(a)]++;
    for (int j = 0; j < p; ++j) {
      centers[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] += x(i, j);
    }
  }
  for (int c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) {
      for (double& v : centers[static_cast<std::size_t>(c)]) v /= counts[static_cast<std::size_t>(c)];
    }
  }
  KmeansRun run;
  run.labels = std::move(assign);
  for (int i = 0; i < n; ++i) {
    run.wcss += sq_dist(x, i, centers[static_cast<std::size_t>(run.labels[static_cast<std::size_t>(i)])]);
  }
  return run;
}

}  // namespace

Partition kmeans_label(const AttributeMatrix& x, const KmeansConfig& cfg) {
  const int n = x.rows();
  if (cfg.k < 1) throw ValidationError("kmeans: K must be >= 1");
  if (cfg.k > n) {
    throw ValidationError("kmeans: K=" + std::to_string(cfg.k) + " exceeds N=" +
                          std::to_string(n));
  }
  if (cfg.max_iters < 1 || cfg.n_restarts < 1) {
    throw ValidationError("kmeans: max_iters and n_restarts must be >= 1");
  }
  for (double v : x.data) {
    if (!std::isfinite(v)) throw ValidationError("kmeans: non-finite attribute value");
  }

  std::vector<KmeansRun> runs(static_cast<std::size_t>(cfg.n_restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.n_restarts; ++r) {
    runs[static_cast<std::size_t>(r)] =
        lloyd(x, cfg.k, cfg.max_iters, derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
  }
  int best = 0;
  for (int r = 1; r < cfg.n_restarts; ++r) {
    if (runs[static_cast<std::size_t>(r)].wcss < runs[static_cast<std::size_t>(best)].wcss) {
      best = r;
    }
  }
  return Partition(std::move(runs[static_cast<std::size_t>(best)].labels), cfg.k);
}

double nmi(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw ValidationError("nmi: partitions have different lengths");
  }
  const int n = a.size();
  const int ka = a.n_classes;
  const int kb = b.n_classes;
  std::vector<long long> joint(static_cast<std::size_t>(ka) * static_cast<std::size_t>(kb), 0);
  std::vector<long long> ca(static_cast<std::size_t>(ka), 0);
  std::vector<long long> cb(static_cast<std::size_t>(kb), 0);
  for (int i = 0; i < n; ++i) {
    const int u = a.labels[static_cast<std::size_t>(i)];
    const int v = b.labels[static_cast<std::size_t>(i)];
    joint[static_cast<std::size_t>(u) * kb + v]++;
    ca[static_cast<std::size_t>(u)]++;
    cb[static_cast<std::size_t>(v)]++;
  }
  const double dn = static_cast<double>(n);
  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (long long c : ca) {
    if (c > 0) ha -= (c / dn) * std::log(c / dn);
  }
  for (long long c : cb) {
    if (c > 0) hb -= (c / dn) * std::log(c / dn);
  }
  for (int u = 0; u < ka; ++u) {
    for (int v = 0; v < kb; ++v) {
      const long long c = joint[static_cast<std::size_t>(u) * kb + v];
      if (c > 0) {
        mi += (c / dn) * (std::log(c * dn) -
                          std::log(static_cast<double>(ca[static_cast<std::size_t>(u)])) -
                          std::log(static_cast<double>(cb[static_cast<std::size_t>(v)])));
      }
    }
  }
  if (ha + hb <= 0.0) return 1.0;  // both partitions are single-class
  const double value = 2.0 * mi / (ha + hb);
  return std::clamp(value, 0.0, 1.0);
}

AttributeMatrix zscore_columns(const AttributeMatrix& x) {
  AttributeMatrix out = x;
  for (int j = 0; j < x.cols(); ++j) {
    double mean = 0.0;
    for (int i = 0; i < x.rows(); ++i) mean += x(i, j);
    mean /= x.rows();
    double var = 0.0;
    for (int i = 0; i < x.rows(); ++i) {
      const double d = x(i, j) - mean;
      var += d * d;
    }
    var /= x.rows();
    const double sd = std::sqrt(var);
    for (int i = 0; i < x.rows(); ++i) {
      out(i, j) = sd > 0.0 ? (x(i, j) - mean) / sd : x(i, j) - mean;
    }
  }
  return out;
}

AttributeMatrix extract_column(const AttributeMatrix& x, int j) {
  if (j < 0 || j >= x.cols()) throw ValidationError("extract_column: index out of range");
  AttributeMatrix out(x.rows(), 1);
  for (int i = 0; i < x.rows(); ++i) out(i, 0) = x(i, j);
  return out;
}

}  // namespace attralign
