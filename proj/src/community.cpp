#include "attralign/community.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "attralign/errors.hpp"
#include "attralign/rng.hpp"

namespace attralign {

double modularity(const Graph& g, const Partition& z) {
  const int n = g.n_nodes();
  if (z.size() != n) {
    throw ValidationError("modularity: partition length does not match N");
  }
  const double m2 = 2.0 * g.total_weight();
  if (m2 <= 0.0) throw ValidationError("modularity: graph has no edges");

  std::vector<double> sum_in(static_cast<std::size_t>(z.n_classes), 0.0);
  std::vector<double> sum_tot(static_cast<std::size_t>(z.n_classes), 0.0);
  for (int i = 0; i < n; ++i) {
    const int c = z.labels[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : g.neighbors(i)) {
      sum_tot[static_cast<std::size_t>(c)] += w;
      if (z.labels[static_cast<std::size_t>(j)] == c) {
        sum_in[static_cast<std::size_t>(c)] += w;
      }
    }
  }
  double q = 0.0;
  for (int c = 0; c < z.n_classes; ++c) {
    const double t = sum_tot[static_cast<std::size_t>(c)] / m2;
    q += sum_in[static_cast<std::size_t>(c)] / m2 - t * t;
  }
  return q;
}

namespace {

// Working graph for the aggregation levels; self-loops carry the weight of
// edges internal to an aggregated community and count twice toward degree.
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> self_loop;

  int size() const { return static_cast<int>(adj.size()); }

  double degree(int i) const {
    double d = 2.0 * self_loop[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : adj[static_cast<std::size_t>(i)]) d += w;
    return d;
  }
};

// One pass of local moving. comm is updated in place; returns whether any node
// moved.
bool local_moving(const LevelGraph& lg, std::vector<int>& comm, Rng& rng) {
  const int n = lg.size();
  std::vector<double> k(static_cast<std::size_t>(n));
  double m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    k[static_cast<std::size_t>(i)] = lg.degree(i);
    m2 += k[static_cast<std::size_t>(i)];
  }
  std::vector<double> sum_tot(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    sum_tot[static_cast<std::size_t>(comm[static_cast<std::size_t>(i)])] +=
        k[static_cast<std::size_t>(i)];
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);

  std::vector<double> w_to(static_cast<std::size_t>(n), 0.0);
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int idx = 0; idx < n; ++idx) {
      const int i = order[static_cast<std::size_t>(idx)];
      const int c_old = comm[static_cast<std::size_t>(i)];

      // Weights from i to each neighboring community, self-loop excluded.
      std::vector<int> touched;
      for (const auto& [j, w] : lg.adj[static_cast<std::size_t>(i)]) {
        const int c = comm[static_cast<std::size_t>(j)];
        if (w_to[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
        w_to[static_cast<std::size_t>(c)] += w;
      }

      sum_tot[static_cast<std::size_t>(c_old)] -= k[static_cast<std::size_t>(i)];
      const double gain_stay = w_to[static_cast<std::size_t>(c_old)] -
                               sum_tot[static_cast<std::size_t>(c_old)] *
                                   k[static_cast<std::size_t>(i)] / m2;
      int c_new = c_old;
      for (int c : touched) {
        if (c == c_old) continue;
        const double gain = w_to[static_cast<std::size_t>(c)] -
                            sum_tot[static_cast<std::size_t>(c)] *
                                k[static_cast<std::size_t>(i)] / m2;
        if (gain > gain_stay + 1e-12) {
          c_new = c;
          break;  // first strictly improving move wins
        }
      }
      sum_tot[static_cast<std::size_t>(c_new)] += k[static_cast<std::size_t>(i)];
      if (c_new != c_old) {
        comm[static_cast<std::size_t>(i)] = c_new;
        moved = true;
        any_move = true;
      }

      for (int c : touched) w_to[static_cast<std::size_t>(c)] = 0.0;
    }
  }
  return any_move;
}

// Relabels communities to consecutive ids in order of first appearance.
int compress_labels(std::vector<int>& comm) {
  std::vector<int> remap(comm.size(), -1);
  int next = 0;
  for (int& c : comm) {
    if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = next++;
    c = remap[static_cast<std::size_t>(c)];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& comm, int n_comm) {
  LevelGraph out;
  out.adj.resize(static_cast<std::size_t>(n_comm));
  out.self_loop.assign(static_cast<std::size_t>(n_comm), 0.0);
  std::vector<std::vector<std::pair<int, double>>> buckets(
      static_cast<std::size_t>(n_comm));
  for (int i = 0; i < lg.size(); ++i) {
    const int ci = comm[static_cast<std::size_t>(i)];
    out.self_loop[static_cast<std::size_t>(ci)] += lg.self_loop[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : lg.adj[static_cast<std::size_t>(i)]) {
      const int cj = comm[static_cast<std::size_t>(j)];
      if (ci == cj) {
        if (i < j) out.self_loop[static_cast<std::size_t>(ci)] += w;
      } else {
        buckets[static_cast<std::size_t>(ci)].emplace_back(cj, w);
      }
    }
  }
  for (int c = 0; c < n_comm; ++c) {
    auto& b = buckets[static_cast<std::size_t>(c)];
    std::sort(b.begin(), b.end());
    auto& row = out.adj[static_cast<std::size_t>(c)];
    for (const auto& [j, w] : b) {
      if (!row.empty() && row.back().first == j) {
        row.back().second += w;
      } else {
        row.emplace_back(j, w);
      }
    }
  }
  return out;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed) {
  const int n = g.n_nodes();
  if (n < 1) throw ValidationError("louvain: empty graph");

  std::vector<int> node_comm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) node_comm[static_cast<std::size_t>(i)] = i;
  if (g.total_weight() <= 0.0) {
    return Partition(std::move(node_comm), n);  // edgeless: singletons
  }

  LevelGraph lg;
  lg.adj.resize(static_cast<std::size_t>(n));
  lg.self_loop.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) lg.adj[static_cast<std::size_t>(i)] = g.neighbors(i);

  Rng rng(seed);
  // membership of original nodes through the levels
  std::vector<int> assign = node_comm;
  for (;;) {
    std::vector<int> comm(static_cast<std::size_t>(lg.size()));
    for (int i = 0; i < lg.size(); ++i) comm[static_cast<std::size_t>(i)] = i;
    const bool improved = local_moving(lg, comm, rng);
    if (!improved) break;
    const int n_comm = compress_labels(comm);
    for (int v = 0; v < n; ++v) {
      assign[static_cast<std::size_t>(v)] =
          comm[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])];
    }
    if (n_comm == lg.size()) break;  // nothing merged
    lg = aggregate(lg, comm, n_comm);
  }
  const int k = compress_labels(assign);
  return Partition(std::move(assign), k);
}

}  // namespace attralign
