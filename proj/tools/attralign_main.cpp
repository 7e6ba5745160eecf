#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "attralign/aligntest.hpp"
#include "attralign/bestest.hpp"
#include "attralign/community.hpp"
#include "attralign/errors.hpp"
#include "attralign/experiments.hpp"
#include "attralign/io.hpp"
#include "attralign/knn.hpp"
#include "attralign/labeling.hpp"
#include "attralign/synth.hpp"

using json = nlohmann::json;
using namespace attralign;

namespace {

constexpr int kSchemaVersion = 1;

// Seed resolution order: --seed flag, ATTRALIGN_SEED, then entropy (printed so
// the run can be reproduced).
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ATTRALIGN_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ValidationError("ATTRALIGN_SEED is not an unsigned integer");
    }
  }
  std::random_device rd;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
  std::fprintf(stderr, "seed: %" PRIu64 "\n", seed);
  return seed;
}

TransitionMode parse_mode(const std::string& s) {
  if (s == "aswritten") return TransitionMode::kAsWritten;
  if (s == "randomwalk") return TransitionMode::kRandomWalk;
  throw ValidationError("unknown transition mode '" + s + "'");
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
}

json result_to_json(const AlignmentResult& r) {
  return json{{"schema_version", kSchemaVersion},
              {"p_value", r.p_value},
              {"mean_entropy", r.mean_entropy},
              {"mean_null_entropy", r.mean_null_entropy},
              {"mann_whitney_auc", r.mann_whitney_auc},
              {"n_trials", r.n_trials},
              {"sample_size", r.sample_size},
              {"seed", r.seed},
              {"entropies", r.entropies},
              {"null_entropies", r.null_entropies},
              {"warnings", r.warnings}};
}

std::string result_to_csv(const AlignmentResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g,%d,%d,%" PRIu64 "\n",
                r.p_value, r.mean_entropy, r.mean_null_entropy, r.mann_whitney_auc,
                r.n_trials, r.sample_size, r.seed);
  return std::string("p_value,mean_entropy,mean_null_entropy,mann_whitney_auc,"
                     "n_trials,sample_size,seed\n") +
         buf;
}

// ---- synth ------------------------------------------------------------------

struct SynthArgs {
  int n = 200;
  int k = 4;
  std::vector<int> blocks;
  double p_in = 0.6;
  double p_out = 0.02;
  int attr_dims = 3;
  double mean_scale = 1.0;
  std::optional<std::uint64_t> seed;
  std::string params_file;
  std::string out_prefix = "synth";
};

int cmd_synth(const SynthArgs& args) {
  SbmParams params;
  int attr_dims = args.attr_dims;
  std::optional<std::uint64_t> seed_flag = args.seed;
  if (!args.params_file.empty()) {
    std::ifstream in(args.params_file);
    if (!in) throw IoError("cannot open params file: " + args.params_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(args.params_file + ": " + std::string(e.what()));
    }
    const int n = j.at("n").get<int>();
    if (j.at("blocks").is_array()) {
      params.block_sizes = j.at("blocks").get<std::vector<int>>();
      if (params.n() != n) throw ValidationError("params: blocks do not sum to n");
    } else {
      params = equal_blocks(n, j.at("blocks").get<int>(), 0, 0);
    }
    params.p_in = j.at("p_in").get<double>();
    params.p_out = j.at("p_out").get<double>();
    attr_dims = j.value("attr_dims", args.attr_dims);
    if (j.contains("seed")) seed_flag = j.at("seed").get<std::uint64_t>();
  } else if (!args.blocks.empty()) {
    params.block_sizes = args.blocks;
    params.p_in = args.p_in;
    params.p_out = args.p_out;
  } else {
    params = equal_blocks(args.n, args.k, args.p_in, args.p_out);
  }

  const std::uint64_t seed = resolve_seed(seed_flag);
  auto [graph, planted] = generate_sbm(params, derive_seed(seed, 1));
  const auto gauss = sample_gaussian_params(params.n_blocks(), attr_dims,
                                            derive_seed(seed, 2), args.mean_scale);
  const AttributeMatrix x = generate_attributes(planted, gauss, derive_seed(seed, 3));

  char meta[160];
  std::snprintf(meta, sizeof(meta), "seed=%" PRIu64 " n=%d K=%d p_in=%g p_out=%g",
                seed, params.n(), params.n_blocks(), params.p_in, params.p_out);
  save_edge_list(graph, args.out_prefix + ".edges",
                 {"generated by attralign synth", meta});
  save_partition(planted, args.out_prefix + ".labels");
  save_attributes(x, args.out_prefix + ".attrs.csv");
  std::fprintf(stderr, "wrote %s.edges, %s.labels, %s.attrs.csv (%s)\n",
               args.out_prefix.c_str(), args.out_prefix.c_str(),
               args.out_prefix.c_str(), meta);
  return 0;
}

// ---- test -------------------------------------------------------------------

struct TestArgs {
  std::string graph_path;
  std::string attrs_path;
  std::string labels_path;
  int k = 0;
  int sample_size = 100;
  int trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string transition = "aswritten";
  std::string out;
  std::string format = "json";
  bool standardize = false;
};

int cmd_test(const TestArgs& args) {
  const Graph g = load_edge_list(args.graph_path);
  const std::uint64_t seed = resolve_seed(args.seed);

  Partition z_tilde;
  if (!args.labels_path.empty()) {
    z_tilde = load_partition(args.labels_path);
  } else if (!args.attrs_path.empty()) {
    if (args.k < 1) throw ValidationError("test: --K is required with --attrs");
    AttributeMatrix x = load_attributes(args.attrs_path);
    if (args.standardize) x = zscore_columns(x);
    KmeansConfig km;
    km.k = args.k;
    km.seed = derive_seed(seed, 101);
    z_tilde = kmeans_label(x, km);
  } else {
    throw ValidationError("test: provide --attrs or --labels");
  }
  if (z_tilde.size() != g.n_nodes()) {
    throw ValidationError("test: labeling covers " + std::to_string(z_tilde.size()) +
                          " nodes but the graph has " + std::to_string(g.n_nodes()));
  }

  TestConfig cfg;
  cfg.n_trials = args.trials;
  cfg.sample_size = args.sample_size;
  cfg.seed = seed;
  cfg.mode = parse_mode(args.transition);
  const AlignmentResult r = run_test(g, z_tilde, cfg);
  for (const auto& w : r.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());

  if (args.format == "csv") {
    write_text(args.out, result_to_csv(r));
  } else {
    write_text(args.out, result_to_json(r).dump(2) + "\n");
  }
  return 0;
}

// ---- small wrappers ----------------------------------------------------------

int cmd_knn(const std::string& attrs_path, int k, bool standardize,
            const std::string& out) {
  AttributeMatrix x = load_attributes(attrs_path);
  if (standardize) x = zscore_columns(x);
  const Graph g = build_knn_graph(x, k);
  save_edge_list(g, out, {"k-nearest-neighbor graph, k=" + std::to_string(k)});
  std::fprintf(stderr, "wrote %s (%d nodes, %zu edges)\n", out.c_str(), g.n_nodes(),
               g.n_edges());
  return 0;
}

int cmd_label(const std::string& attrs_path, int k, int column, bool standardize,
              int restarts, int max_iters, const std::optional<std::uint64_t>& seed_flag,
              const std::string& out) {
  AttributeMatrix x = load_attributes(attrs_path);
  if (standardize) x = zscore_columns(x);
  if (column >= 0) x = extract_column(x, column);
  KmeansConfig cfg;
  cfg.k = k;
  cfg.n_restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.seed = resolve_seed(seed_flag);
  const Partition z = kmeans_label(x, cfg);
  if (out.empty()) {
    for (int v : z.labels) std::printf("%d\n", v);
  } else {
    save_partition(z, out);
    std::fprintf(stderr, "wrote %s (K=%d)\n", out.c_str(), z.n_classes);
  }
  return 0;
}

int cmd_bestest(const std::string& graph_path, const std::string& labels_path,
                int n_perms, const std::optional<std::uint64_t>& seed_flag,
                const std::string& out, const std::string& format) {
  const Graph g = load_edge_list(graph_path);
  const Partition z = load_partition(labels_path);
  const std::uint64_t seed = resolve_seed(seed_flag);
  const double entropy = bestest_entropy(block_stats(g, z));
  const double p = bestest_pvalue(g, z, n_perms, seed);
  if (format == "csv") {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "entropy,p_value,n_perms,seed\n%.10g,%.10g,%d,%" PRIu64 "\n", entropy,
                  p, n_perms, seed);
    write_text(out, buf);
  } else {
    const json j{{"schema_version", kSchemaVersion},
                 {"entropy", entropy},
                 {"p_value", p},
                 {"n_perms", n_perms},
                 {"seed", seed}};
    write_text(out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_nmi(const std::string& path_a, const std::string& path_b) {
  const Partition a = load_partition(path_a);
  const Partition b = load_partition(path_b);
  std::printf("%.10g\n", nmi(a, b));
  return 0;
}

int cmd_louvain(const std::string& graph_path,
                const std::optional<std::uint64_t>& seed_flag, const std::string& out) {
  const Graph g = load_edge_list(graph_path);
  const Partition z = louvain(g, resolve_seed(seed_flag));
  std::printf("communities: %d\n", z.n_classes);
  if (g.total_weight() > 0.0) std::printf("modularity: %.10g\n", modularity(g, z));
  if (!out.empty()) {
    save_partition(z, out);
    std::fprintf(stderr, "wrote %s\n", out.c_str());
  }
  return 0;
}

// ---- experiments --------------------------------------------------------------

std::string csv_header_comment(const std::string& kind, std::uint64_t seed) {
  char buf[120];
  std::snprintf(buf, sizeof(buf), "# schema_version=%d kind=%s seed=%" PRIu64 "\n",
                kSchemaVersion, kind.c_str(), seed);
  return buf;
}

int cmd_experiment_perturb(PerturbConfig cfg, const std::optional<std::uint64_t>& seed_flag,
                           const std::string& out, const std::string& format) {
  cfg.seed = resolve_seed(seed_flag);
  const auto rows = run_perturb_experiment(cfg);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"fraction", r.fraction},
                     {"mean_entropy", r.mean_entropy},
                     {"p_value", r.p_value},
                     {"bestest_entropy", r.bestest_entropy}});
    }
    const json j{{"schema_version", kSchemaVersion},
                 {"kind", "perturb"},
                 {"seed", cfg.seed},
                 {"rows", arr}};
    write_text(out, j.dump(2) + "\n");
    return 0;
  }
  std::string text = csv_header_comment("perturb", cfg.seed);
  text += "fraction,mean_entropy,p_value,bestest_entropy\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g\n", r.fraction,
                  r.mean_entropy, r.p_value, r.bestest_entropy);
    text += buf;
  }
  write_text(out, text);
  return 0;
}

int cmd_experiment_sweep(SweepConfig cfg, const std::optional<std::uint64_t>& seed_flag,
                         const std::string& out, const std::string& format) {
  cfg.seed = resolve_seed(seed_flag);
  const auto rows = run_sweep_experiment(cfg);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"p_in", r.p_in},
                     {"p_out", r.p_out},
                     {"ratio", r.ratio},
                     {"mean_entropy", r.mean_entropy},
                     {"sd_entropy", r.sd_entropy},
                     {"mean_p", r.mean_p},
                     {"sd_p", r.sd_p}});
    }
    const json j{{"schema_version", kSchemaVersion},
                 {"kind", "sweep"},
                 {"seed", cfg.seed},
                 {"rows", arr}};
    write_text(out, j.dump(2) + "\n");
    return 0;
  }
  std::string text = csv_header_comment("sweep", cfg.seed);
  text += "p_in,p_out,ratio,mean_entropy,sd_entropy,mean_p,sd_p\n";
  char buf[200];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  r.p_in, r.p_out, r.ratio, r.mean_entropy, r.sd_entropy, r.mean_p,
                  r.sd_p);
    text += buf;
  }
  write_text(out, text);
  return 0;
}

int cmd_experiment_markers(const std::string& attrs_path, MarkersConfig cfg,
                           const std::optional<std::uint64_t>& seed_flag,
                           const std::string& out, const std::string& format) {
  const AttributeMatrix x = load_attributes(attrs_path);
  cfg.seed = resolve_seed(seed_flag);
  const MarkersResult res = run_markers_experiment(x, cfg);
  std::fprintf(stderr, "detected %d communities\n", res.communities.n_classes);
  for (const auto& r : res.rows) {
    if (!r.warning.empty()) {
      std::fprintf(stderr, "warning: marker %d: %s\n", r.marker, r.warning.c_str());
    }
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : res.rows) {
      arr.push_back({{"marker_index", r.marker},
                     {"nmi", r.nmi_value},
                     {"p_value", r.p_value},
                     {"warning", r.warning}});
    }
    const json j{{"schema_version", kSchemaVersion},
                 {"kind", "markers"},
                 {"seed", cfg.seed},
                 {"n_communities", res.communities.n_classes},
                 {"rows", arr}};
    write_text(out, j.dump(2) + "\n");
    return 0;
  }
  std::string text = csv_header_comment("markers", cfg.seed);
  text += "marker_index,nmi,p_value\n";
  char buf[120];
  for (const auto& r : res.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10g\n", r.marker, r.nmi_value,
                  r.p_value);
    text += buf;
  }
  write_text(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical test of node-attribute / network-structure alignment "
               "via sampled label propagation"};
  app.require_subcommand(1);

  // synth
  SynthArgs synth_args;
  auto* synth =
      app.add_subcommand("synth", "Generate an SBM graph with Gaussian attributes");
  synth->add_option("--n", synth_args.n, "Number of nodes");
  synth->add_option("--K", synth_args.k, "Number of equal blocks");
  synth->add_option("--blocks", synth_args.blocks, "Explicit block sizes")->delimiter(',');
  synth->add_option("--p-in", synth_args.p_in, "Within-block edge probability");
  synth->add_option("--p-out", synth_args.p_out, "Between-block edge probability");
  synth->add_option("--attr-dims", synth_args.attr_dims, "Attribute dimension");
  synth->add_option("--mean-scale", synth_args.mean_scale, "Scale on the Gaussian means");
  auto* synth_seed = synth->add_option("--seed", "RNG seed");
  synth->add_option("--params", synth_args.params_file,
                    "JSON parameter file {n, blocks, p_in, p_out, attr_dims, seed}");
  synth->add_option("--out-prefix", synth_args.out_prefix, "Output file prefix");

  // knn
  std::string knn_attrs, knn_out = "knn.edges";
  int knn_k = 5;
  bool knn_std = false;
  auto* knn =
      app.add_subcommand("knn", "Build a k-nearest-neighbor graph from attributes");
  knn->add_option("--attrs", knn_attrs, "Attribute CSV")->required();
  knn->add_option("--k", knn_k, "Neighbor count");
  knn->add_flag("--standardize", knn_std, "z-score columns first");
  knn->add_option("--out", knn_out, "Output edge list");

  // label
  std::string label_attrs, label_out;
  int label_k = 0, label_column = -1, label_restarts = 10, label_iters = 300;
  bool label_std = false;
  auto* label =
      app.add_subcommand("label", "Cluster attributes into a partition (k-means)");
  label->add_option("--attrs", label_attrs, "Attribute CSV")->required();
  label->add_option("--K", label_k, "Cluster count")->required();
  label->add_option("--column", label_column, "Use a single attribute column");
  label->add_flag("--standardize", label_std, "z-score columns first");
  label->add_option("--restarts", label_restarts, "k-means restarts");
  label->add_option("--max-iters", label_iters, "k-means iteration cap");
  auto* label_seed = label->add_option("--seed", "RNG seed");
  label->add_option("--out", label_out, "Output partition file (stdout if omitted)");

  // test
  TestArgs test_args;
  auto* test = app.add_subcommand("test", "Run the label-propagation alignment test");
  test->add_option("--graph", test_args.graph_path, "Edge list")->required();
  test->add_option("--attrs", test_args.attrs_path, "Attribute CSV (clustered with --K)");
  test->add_option("--labels", test_args.labels_path, "Partition file");
  test->add_option("--K", test_args.k, "Cluster count for --attrs");
  test->add_option("--l", test_args.sample_size, "Labeled sample size per trial");
  test->add_option("--trials", test_args.trials, "Number of trials");
  auto* test_seed = test->add_option("--seed", "RNG seed");
  test->add_option("--transition", test_args.transition,
                   "Transition matrix: aswritten|randomwalk");
  test->add_flag("--standardize", test_args.standardize, "z-score attributes first");
  test->add_option("--out", test_args.out, "Output path (stdout if omitted)");
  test->add_option("--format", test_args.format, "json|csv");

  // bestest
  std::string best_graph, best_labels, best_out, best_format = "json";
  int best_perms = 1000;
  auto* best = app.add_subcommand("bestest", "Blockmodel entropy test of a partition");
  best->add_option("--graph", best_graph, "Edge list")->required();
  best->add_option("--labels", best_labels, "Partition file")->required();
  best->add_option("--perms", best_perms, "Number of permutations");
  auto* best_seed = best->add_option("--seed", "RNG seed");
  best->add_option("--out", best_out, "Output path (stdout if omitted)");
  best->add_option("--format", best_format, "json|csv");

  // nmi
  std::string nmi_a, nmi_b;
  auto* nmi_cmd =
      app.add_subcommand("nmi", "Normalized mutual information of two partitions");
  nmi_cmd->add_option("a", nmi_a, "Partition file A")->required();
  nmi_cmd->add_option("b", nmi_b, "Partition file B")->required();

  // louvain
  std::string louv_graph, louv_out;
  auto* louv = app.add_subcommand("louvain", "Louvain community detection");
  louv->add_option("--graph", louv_graph, "Edge list")->required();
  auto* louv_seed = louv->add_option("--seed", "RNG seed");
  louv->add_option("--out", louv_out, "Output partition file");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Reproduction harnesses");
  exp->require_subcommand(1);

  PerturbConfig perturb_cfg;
  std::string perturb_out, perturb_format = "csv", perturb_mode = "aswritten";
  auto* perturb = exp->add_subcommand("perturb", "Label-perturbation sweep");
  perturb->add_option("--n", perturb_cfg.n, "Nodes");
  perturb->add_option("--K", perturb_cfg.k, "Blocks");
  perturb->add_option("--p-in", perturb_cfg.p_in, "Within-block probability");
  perturb->add_option("--p-out", perturb_cfg.p_out, "Between-block probability");
  perturb->add_option("--attr-dims", perturb_cfg.attr_dims, "Attribute dimension");
  perturb->add_option("--mean-scale", perturb_cfg.mean_scale, "Scale on Gaussian means");
  perturb->add_option("--fractions", perturb_cfg.fractions, "Fraction grid")
      ->delimiter(',');
  perturb->add_option("--l", perturb_cfg.sample_size, "Labeled sample size");
  perturb->add_option("--trials", perturb_cfg.n_trials, "Trials per fraction");
  perturb->add_option("--transition", perturb_mode, "aswritten|randomwalk");
  auto* perturb_seed = perturb->add_option("--seed", "RNG seed");
  perturb->add_option("--out", perturb_out, "Output path (stdout if omitted)");
  perturb->add_option("--format", perturb_format, "csv|json");

  SweepConfig sweep_cfg;
  std::string sweep_out, sweep_format = "csv", sweep_mode = "aswritten";
  auto* sweep =
      exp->add_subcommand("sweep", "Community-strength sweep at fixed mean degree");
  sweep->add_option("--n", sweep_cfg.n, "Nodes");
  sweep->add_option("--K", sweep_cfg.k, "Blocks");
  sweep->add_option("--p-in-grid", sweep_cfg.p_in_grid, "p_in grid")->delimiter(',');
  sweep->add_option("--mean-degree", sweep_cfg.mean_degree, "Target mean degree");
  sweep->add_option("--realizations", sweep_cfg.realizations, "Graphs per grid point");
  sweep->add_option("--attr-dims", sweep_cfg.attr_dims, "Attribute dimension");
  sweep->add_option("--mean-scale", sweep_cfg.mean_scale, "Scale on Gaussian means");
  sweep->add_option("--l", sweep_cfg.sample_size, "Labeled sample size");
  sweep->add_option("--trials", sweep_cfg.n_trials, "Trials per realization");
  sweep->add_option("--transition", sweep_mode, "aswritten|randomwalk");
  auto* sweep_seed = sweep->add_option("--seed", "RNG seed");
  sweep->add_option("--out", sweep_out, "Output path (stdout if omitted)");
  sweep->add_option("--format", sweep_format, "csv|json");

  MarkersConfig markers_cfg;
  std::string markers_attrs, markers_out, markers_format = "csv",
                             markers_mode = "aswritten";
  auto* markers = exp->add_subcommand("markers", "Per-feature marker scan on a k-NN graph");
  markers->add_option("--attrs", markers_attrs, "Attribute CSV")->required();
  markers->add_option("--k", markers_cfg.knn_k, "k-NN neighbor count");
  markers->add_option("--K", markers_cfg.n_clusters,
                      "Marker cluster count (default: detected communities)");
  markers->add_option("--l", markers_cfg.sample_size, "Labeled sample size");
  markers->add_option("--trials", markers_cfg.n_trials, "Trials per marker");
  markers->add_flag("--standardize", markers_cfg.standardize, "z-score columns first");
  markers->add_option("--transition", markers_mode, "aswritten|randomwalk");
  auto* markers_seed = markers->add_option("--seed", "RNG seed");
  markers->add_option("--out", markers_out, "Output path (stdout if omitted)");
  markers->add_option("--format", markers_format, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto seed_of = [](CLI::Option* opt) -> std::optional<std::uint64_t> {
    if (opt->count() == 0) return std::nullopt;
    return opt->as<std::uint64_t>();
  };

  try {
    if (synth->parsed()) {
      synth_args.seed = seed_of(synth_seed);
      return cmd_synth(synth_args);
    }
    if (knn->parsed()) return cmd_knn(knn_attrs, knn_k, knn_std, knn_out);
    if (label->parsed()) {
      return cmd_label(label_attrs, label_k, label_column, label_std, label_restarts,
                       label_iters, seed_of(label_seed), label_out);
    }
    if (test->parsed()) {
      test_args.seed = seed_of(test_seed);
      return cmd_test(test_args);
    }
    if (best->parsed()) {
      return cmd_bestest(best_graph, best_labels, best_perms, seed_of(best_seed),
                         best_out, best_format);
    }
    if (nmi_cmd->parsed()) return cmd_nmi(nmi_a, nmi_b);
    if (louv->parsed()) return cmd_louvain(louv_graph, seed_of(louv_seed), louv_out);
    if (exp->parsed()) {
      if (perturb->parsed()) {
        perturb_cfg.mode = parse_mode(perturb_mode);
        return cmd_experiment_perturb(perturb_cfg, seed_of(perturb_seed), perturb_out,
                                      perturb_format);
      }
      if (sweep->parsed()) {
        sweep_cfg.mode = parse_mode(sweep_mode);
        return cmd_experiment_sweep(sweep_cfg, seed_of(sweep_seed), sweep_out,
                                    sweep_format);
      }
      if (markers->parsed()) {
        markers_cfg.mode = parse_mode(markers_mode);
        return cmd_experiment_markers(markers_attrs, markers_cfg, seed_of(markers_seed),
                                      markers_out, markers_format);
      }
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
