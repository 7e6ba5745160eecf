// Benchmark of the OpenMP kernels against their serial reference
// implementations. Each pair must produce identical results; the table
// reports timings, speedup, and the observed deviation.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "attralign/aligntest.hpp"
#include "attralign/bestest.hpp"
#include "attralign/knn.hpp"
#include "attralign/reference.hpp"
#include "attralign/rng.hpp"
#include "attralign/synth.hpp"

using namespace attralign;

namespace {

template <typename F>
double time_seconds(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& kernel, double serial_s, double parallel_s, double max_dev) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx %12.3g\n", kernel.c_str(), serial_s,
              parallel_s, serial_s / parallel_s, max_dev);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %11s %11s %9s %12s\n", "kernel", "serial", "parallel", "speedup",
              "max dev");

  {
    Rng rng(1);
    AttributeMatrix x(3000, 8);
    for (double& v : x.data) v = rng.normal();
    Graph serial_g, parallel_g;
    const double ts = time_seconds([&] { serial_g = reference::build_knn_graph(x, 5); });
    const double tp = time_seconds([&] { parallel_g = build_knn_graph(x, 5); });
    double dev = serial_g.n_edges() == parallel_g.n_edges() ? 0.0 : 1.0;
    const auto es = serial_g.edges();
    const auto ep = parallel_g.edges();
    for (std::size_t i = 0; dev == 0.0 && i < es.size(); ++i) {
      if (es[i].i != ep[i].i || es[i].j != ep[i].j) dev = 1.0;
    }
    row("knn graph (N=3000, p=8)", ts, tp, dev);
  }

  {
    const SbmParams params = equal_blocks(2000, 4, 0.1, 0.01);
    std::pair<Graph, Partition> serial_r, parallel_r;
    const double ts = time_seconds([&] { serial_r = reference::generate_sbm(params, 2); });
    const double tp = time_seconds([&] { parallel_r = generate_sbm(params, 2); });
    const double dev =
        serial_r.first.n_edges() == parallel_r.first.n_edges() ? 0.0 : 1.0;
    row("sbm generation (N=2000)", ts, tp, dev);
  }

  {
    auto [g, planted] = generate_sbm(equal_blocks(400, 4, 0.4, 0.03), 3);
    const TransitionMatrix t = transition_matrix(g);
    TestConfig cfg;
    cfg.n_trials = 400;
    cfg.sample_size = 200;
    cfg.seed = 11;
    AlignmentResult serial_r, parallel_r;
    const double ts = time_seconds([&] { serial_r = reference::run_test(t, planted, cfg); });
    const double tp = time_seconds([&] { parallel_r = run_test(t, planted, cfg); });
    double dev = 0.0;
    for (std::size_t i = 0; i < serial_r.entropies.size(); ++i) {
      dev = std::max(dev, std::fabs(serial_r.entropies[i] - parallel_r.entropies[i]));
      dev = std::max(dev,
                     std::fabs(serial_r.null_entropies[i] - parallel_r.null_entropies[i]));
    }
    row("alignment trials (T*=400)", ts, tp, dev);
  }

  {
    auto [g, planted] = generate_sbm(equal_blocks(400, 4, 0.3, 0.02), 4);
    double ps = 0.0, pp = 0.0;
    const double ts =
        time_seconds([&] { ps = reference::bestest_pvalue(g, planted, 3000, 5); });
    const double tp = time_seconds([&] { pp = bestest_pvalue(g, planted, 3000, 5); });
    row("blockmodel permutations", ts, tp, std::fabs(ps - pp));
  }

  return 0;
}
