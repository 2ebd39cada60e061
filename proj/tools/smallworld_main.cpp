#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smallworld/compare.hpp"
#include "smallworld/components.hpp"
#include "smallworld/errors.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/milgram.hpp"
#include "smallworld/random_model.hpp"
#include "smallworld/report.hpp"

namespace sw = smallworld;

namespace {

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw sw::DataError("cannot open output file: " + output_path);
  }
  out << payload;
}

// Input cleanup is silent in the library; at the tool level the counts go to
// stderr so a user notices when their file was not a simple graph.
void note_dropped(const sw::EdgeList& edges) {
  if (edges.dropped_self_loops > 0) {
    std::cerr << "note: dropped " << edges.dropped_self_loops
              << " self-loop(s)\n";
  }
  if (edges.collapsed_duplicates > 0) {
    std::cerr << "note: collapsed " << edges.collapsed_duplicates
              << " duplicate edge(s)\n";
  }
}

sw::UndirectedGraph load_undirected(const std::string& path) {
  auto parsed = sw::parse_edge_list_file(path, false);
  note_dropped(parsed.edges);
  return sw::build_undirected(parsed.edges, std::move(parsed.ids));
}

sw::DirectedGraph load_directed(const std::string& path) {
  auto parsed = sw::parse_edge_list_file(path, true);
  note_dropped(parsed.edges);
  return sw::build_directed(parsed.edges, std::move(parsed.ids));
}

sw::DegreeMode parse_degree_mode(const std::string& name) {
  if (name == "degree") return sw::DegreeMode::Degree;
  if (name == "in") return sw::DegreeMode::In;
  return sw::DegreeMode::Out;
}

sw::PathMode parse_path_mode(const std::string& name) {
  if (name == "undirected") return sw::PathMode::Undirected;
  if (name == "directed") return sw::PathMode::Directed;
  return sw::PathMode::DirectedAsUndirected;
}

struct StatsOpts {
  std::string input, format = "json", output;
  bool directed = false;
  unsigned threads = 0;
};

void run_stats(const StatsOpts& opts) {
  sw::SummaryStats stats =
      opts.directed
          ? sw::summary_stats(load_directed(opts.input), opts.threads)
          : sw::summary_stats(load_undirected(opts.input), opts.threads);
  emit(sw::stats_json(stats), opts.output);
}

struct ComponentsOpts {
  std::string input, kind = "auto", format = "json", output;
  bool directed = false;
};

void run_components(const ComponentsOpts& opts) {
  std::string kind = opts.kind;
  if (kind == "auto") kind = opts.directed ? "strong" : "connected";
  sw::ComponentLabeling labeling;
  if (opts.directed) {
    if (kind == "connected") {
      throw sw::UsageError(
          "components: connected kind requires an undirected input");
    }
    sw::DirectedGraph graph = load_directed(opts.input);
    labeling = kind == "strong" ? sw::strongly_connected_components(graph)
                                : sw::weakly_connected_components(graph);
  } else {
    if (kind != "connected") {
      throw sw::UsageError("components: " + kind +
                           " kind requires a directed input (--directed)");
    }
    labeling = sw::connected_components(load_undirected(opts.input));
  }
  emit(opts.format == "csv" ? sw::components_csv(labeling)
                            : sw::components_json(labeling),
       opts.output);
}

struct DegreeDistOpts {
  std::string input, mode = "auto", format = "csv", output;
  bool directed = false;
};

void run_degree_dist(const DegreeDistOpts& opts) {
  std::string mode = opts.mode;
  if (mode == "auto") mode = opts.directed ? "in" : "degree";
  sw::DegreeHistogram histogram =
      opts.directed
          ? sw::degree_histogram(load_directed(opts.input),
                                 parse_degree_mode(mode))
          : sw::degree_histogram(load_undirected(opts.input),
                                 parse_degree_mode(mode));
  emit(opts.format == "json" ? sw::histogram_json(histogram)
                             : sw::histogram_csv(histogram),
       opts.output);
}

struct ErBaselineOpts {
  std::string input, format = "json", output;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

void run_er_baseline(const ErBaselineOpts& opts) {
  sw::UndirectedGraph graph = load_undirected(opts.input);
  sw::ErBaseline baseline =
      sw::matched_er_baseline(graph, opts.seed, opts.threads);
  double input_clustering = sw::average_clustering(graph, opts.threads);
  std::cerr << "seed: " << opts.seed << "\n";
  emit(sw::er_baseline_json(baseline, input_clustering), opts.output);
}

struct MilgramOpts {
  std::string input, mode = "undirected", format = "json", output;
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;
  bool paper_schedule = false;
  unsigned threads = 0;
};

void run_milgram_cmd(const MilgramOpts& opts) {
  sw::PathMode mode = parse_path_mode(opts.mode);
  if (!opts.paper_schedule && opts.pairs == 0) {
    throw sw::UsageError("milgram: --pairs is required (or --paper-schedule)");
  }

  sw::UndirectedGraph undirected;
  sw::DirectedGraph directed;
  sw::NodeId n = 0;
  if (mode == sw::PathMode::Undirected) {
    undirected = load_undirected(opts.input);
    n = undirected.node_count();
  } else {
    directed = load_directed(opts.input);
    n = directed.node_count();
  }
  auto run_one = [&](std::uint64_t pairs, std::uint64_t seed) {
    sw::MilgramConfig config{pairs, seed, mode};
    return mode == sw::PathMode::Undirected
               ? sw::run_milgram(undirected, config, opts.threads)
               : sw::run_milgram(directed, config, opts.threads);
  };

  std::cerr << "seed: " << opts.seed << "\n";
  if (opts.paper_schedule) {
    if (opts.format != "json") {
      throw sw::UsageError("milgram: --paper-schedule emits JSON only");
    }
    // The three sample sizes used throughout the reference experiment; each
    // round gets its own seed (and hence its own partition).
    std::vector<sw::MilgramRun> runs;
    std::uint64_t sizes[] = {96, 24000, n};
    for (std::uint64_t i = 0; i < 3; ++i) {
      std::uint64_t seed = opts.seed + i;
      runs.push_back({run_one(sizes[i], seed), seed, mode});
    }
    emit(sw::milgram_schedule_json(runs), opts.output);
    return;
  }
  sw::MilgramResult result = run_one(opts.pairs, opts.seed);
  emit(opts.format == "csv" ? sw::milgram_histogram_csv(result)
                            : sw::milgram_json(result, opts.seed, mode),
       opts.output);
}

struct CompareOpts {
  std::string undirected_input, directed_input;
  std::string direction = "degree-to-indegree", format = "csv", output;
  std::uint64_t k = 10;
};

void run_compare(const CompareOpts& opts) {
  sw::UndirectedGraph undirected = load_undirected(opts.undirected_input);
  sw::DirectedGraph directed = load_directed(opts.directed_input);
  sw::CompareTable table =
      opts.direction == "degree-to-indegree"
          ? sw::cross_rank_table(undirected, directed, opts.k)
          : sw::cross_rank_table(directed, undirected, opts.k);
  if (opts.format == "json") {
    emit(sw::compare_json(table), opts.output);
  } else {
    std::cerr << "rank_overlap: " << table.rank_overlap << "\n";
    emit(sw::compare_csv(table), opts.output);
  }
}

struct TopKOpts {
  std::string input, mode = "auto", format = "csv", output;
  bool directed = false;
  std::uint64_t k = 10;
};

void run_top_k(const TopKOpts& opts) {
  std::string mode = opts.mode;
  if (mode == "auto") mode = opts.directed ? "in" : "degree";
  std::vector<sw::RankedNode> ranking =
      opts.directed ? sw::top_k(load_directed(opts.input), opts.k,
                                parse_degree_mode(mode))
                    : sw::top_k(load_undirected(opts.input), opts.k,
                                parse_degree_mode(mode));
  emit(opts.format == "json" ? sw::top_k_json(ranking, parse_degree_mode(mode))
                             : sw::top_k_csv(ranking),
       opts.output);
}

void add_output_options(CLI::App* sub, std::string& format,
                        std::string& output,
                        const std::vector<std::string>& formats) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--output", output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graph analytics over edge lists: summary metrics, components, random "
      "baselines, ranked comparisons, and sampled shortest-path experiments"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  StatsOpts stats_opts;
  auto* stats = app.add_subcommand(
      "stats", "Degree, clustering, and assortativity summary (JSON)");
  stats->add_option("--input", stats_opts.input, "Edge list file")->required();
  stats->add_flag("--directed", stats_opts.directed,
                  "Treat the input as directed");
  stats->add_option("--threads", stats_opts.threads,
                    "Worker count (default: SMALLWORLD_THREADS or all cores)");
  add_output_options(stats, stats_opts.format, stats_opts.output, {"json"});
  stats->callback([&] { run_stats(stats_opts); });

  ComponentsOpts comp_opts;
  auto* components = app.add_subcommand(
      "components", "Component sizes and the cross-component failure "
                    "probability");
  components->add_option("--input", comp_opts.input, "Edge list file")
      ->required();
  components->add_flag("--directed", comp_opts.directed,
                       "Treat the input as directed");
  components
      ->add_option("--kind", comp_opts.kind,
                   "connected (undirected), strong or weak (directed)")
      ->check(CLI::IsMember({"auto", "connected", "strong", "weak"}));
  add_output_options(components, comp_opts.format, comp_opts.output,
                     {"json", "csv"});
  components->callback([&] { run_components(comp_opts); });

  DegreeDistOpts dist_opts;
  auto* degree_dist = app.add_subcommand(
      "degree-dist", "Degree histogram as plot-ready CSV");
  degree_dist->add_option("--input", dist_opts.input, "Edge list file")
      ->required();
  degree_dist->add_flag("--directed", dist_opts.directed,
                        "Treat the input as directed");
  degree_dist
      ->add_option("--mode", dist_opts.mode,
                   "degree (undirected), in or out (directed)")
      ->check(CLI::IsMember({"auto", "degree", "in", "out"}));
  add_output_options(degree_dist, dist_opts.format, dist_opts.output,
                     {"csv", "json"});
  degree_dist->callback([&] { run_degree_dist(dist_opts); });

  ErBaselineOpts er_opts;
  auto* er_baseline = app.add_subcommand(
      "er-baseline",
      "Clustering of a density-matched random graph vs the input");
  er_baseline->add_option("--input", er_opts.input, "Edge list file")
      ->required();
  er_baseline->add_option("--seed", er_opts.seed, "Generator seed");
  er_baseline->add_option(
      "--threads", er_opts.threads,
      "Worker count (default: SMALLWORLD_THREADS or all cores)");
  add_output_options(er_baseline, er_opts.format, er_opts.output, {"json"});
  er_baseline->callback([&] { run_er_baseline(er_opts); });

  MilgramOpts milgram_opts;
  auto* milgram = app.add_subcommand(
      "milgram", "Sampled source-target chain experiment: geodesic lengths "
                 "and failure rate");
  milgram->add_option("--input", milgram_opts.input, "Edge list file")
      ->required();
  auto* pairs_opt =
      milgram->add_option("--pairs", milgram_opts.pairs,
                          "Number of sampled source-target pairs");
  milgram->add_option("--seed", milgram_opts.seed, "Sampling seed");
  milgram
      ->add_option("--mode", milgram_opts.mode,
                   "undirected, directed, or as-undirected")
      ->check(CLI::IsMember({"undirected", "directed", "as-undirected"}));
  milgram
      ->add_flag("--paper-schedule", milgram_opts.paper_schedule,
                 "Run the 96 / 24000 / N pair schedule with seeds "
                 "seed, seed+1, seed+2")
      ->excludes(pairs_opt);
  milgram->add_option(
      "--threads", milgram_opts.threads,
      "Worker count (default: SMALLWORLD_THREADS or all cores)");
  add_output_options(milgram, milgram_opts.format, milgram_opts.output,
                     {"json", "csv"});
  milgram->callback([&] { run_milgram_cmd(milgram_opts); });

  CompareOpts compare_opts;
  auto* compare = app.add_subcommand(
      "compare", "Cross-graph rank table: top nodes of one graph looked up "
                 "in another");
  compare
      ->add_option("--undirected-input", compare_opts.undirected_input,
                   "Undirected edge list (ranked by degree)")
      ->required();
  compare
      ->add_option("--directed-input", compare_opts.directed_input,
                   "Directed edge list (ranked by indegree)")
      ->required();
  compare
      ->add_option("--direction", compare_opts.direction,
                   "Which graph is ranked first")
      ->check(CLI::IsMember({"degree-to-indegree", "indegree-to-degree"}));
  compare->add_option("--k", compare_opts.k, "Rows in the table");
  add_output_options(compare, compare_opts.format, compare_opts.output,
                     {"csv", "json"});
  compare->callback([&] { run_compare(compare_opts); });

  TopKOpts top_opts;
  auto* top = app.add_subcommand("top-k", "Highest-degree nodes");
  top->add_option("--input", top_opts.input, "Edge list file")->required();
  top->add_flag("--directed", top_opts.directed,
                "Treat the input as directed");
  top->add_option("--mode", top_opts.mode,
                  "degree (undirected), in or out (directed)")
      ->check(CLI::IsMember({"auto", "degree", "in", "out"}));
  top->add_option("--k", top_opts.k, "Number of rows");
  add_output_options(top, top_opts.format, top_opts.output, {"csv", "json"});
  top->callback([&] { run_top_k(top_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const sw::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sw::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
