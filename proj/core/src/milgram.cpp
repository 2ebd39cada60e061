#include "smallworld/milgram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "smallworld/errors.hpp"
#include "smallworld/parallel.hpp"
#include "smallworld/rng.hpp"

namespace smallworld {

namespace {

// Trial index space is [0, 2^63); the partition draw gets the tagged stream
// above it so the same seed never reuses randomness across the two.
constexpr std::uint64_t kPartitionStream = 0x8000000000000000ull;

struct UndirectedAdj {
  const UndirectedGraph& g;
  template <typename F>
  void forward(NodeId v, F&& f) const {
    for (NodeId w : g.neighbors(v)) f(w);
  }
  template <typename F>
  void backward(NodeId v, F&& f) const {
    for (NodeId w : g.neighbors(v)) f(w);
  }
};

struct DirectedAdj {
  const DirectedGraph& g;
  template <typename F>
  void forward(NodeId v, F&& f) const {
    for (NodeId w : g.out_neighbors(v)) f(w);
  }
  template <typename F>
  void backward(NodeId v, F&& f) const {
    for (NodeId w : g.in_neighbors(v)) f(w);
  }
};

// Directed edges walked in both directions. Nodes adjacent both ways are
// visited twice per expansion; the visit stamp makes that harmless.
struct EitherWayAdj {
  const DirectedGraph& g;
  template <typename F>
  void forward(NodeId v, F&& f) const {
    for (NodeId w : g.out_neighbors(v)) f(w);
    for (NodeId w : g.in_neighbors(v)) f(w);
  }
  template <typename F>
  void backward(NodeId v, F&& f) const {
    forward(v, f);
  }
};

// Reusable per-worker BFS state. Visited marks are epoch stamps, so reuse
// across queries costs no O(N) clear.
struct BfsScratch {
  std::vector<std::uint64_t> stamp_f, stamp_b;
  std::vector<std::uint32_t> dist_f, dist_b;
  std::vector<NodeId> frontier_f, frontier_b, next;
  std::uint64_t epoch = 0;

  void ensure(std::size_t n) {
    if (stamp_f.size() < n) {
      stamp_f.assign(n, 0);
      stamp_b.assign(n, 0);
      dist_f.resize(n);
      dist_b.resize(n);
      epoch = 0;
    }
  }
};

// Level-synchronous search from both endpoints, always growing the smaller
// frontier. Once the best meeting point cannot be beaten by paths through
// both unexplored regions (best <= depth_f + depth_b), it is the exact
// geodesic; if either side runs out first, the pair is unreachable.
template <typename Adj>
std::optional<std::uint32_t> bidirectional_distance(const Adj& adj, NodeId s,
                                                    NodeId t,
                                                    BfsScratch& scratch) {
  ++scratch.epoch;
  const std::uint64_t epoch = scratch.epoch;
  scratch.frontier_f.assign(1, s);
  scratch.frontier_b.assign(1, t);
  scratch.stamp_f[s] = epoch;
  scratch.dist_f[s] = 0;
  scratch.stamp_b[t] = epoch;
  scratch.dist_b[t] = 0;

  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = kInf;
  std::uint32_t depth_f = 0, depth_b = 0;

  while (!scratch.frontier_f.empty() && !scratch.frontier_b.empty()) {
    bool expand_forward =
        scratch.frontier_f.size() <= scratch.frontier_b.size();
    scratch.next.clear();
    if (expand_forward) {
      std::uint32_t d = depth_f + 1;
      for (NodeId u : scratch.frontier_f) {
        adj.forward(u, [&](NodeId v) {
          if (scratch.stamp_f[v] != epoch) {
            scratch.stamp_f[v] = epoch;
            scratch.dist_f[v] = d;
            scratch.next.push_back(v);
            if (scratch.stamp_b[v] == epoch) {
              best = std::min<std::uint64_t>(best, d + scratch.dist_b[v]);
            }
          }
        });
      }
      std::swap(scratch.frontier_f, scratch.next);
      depth_f = d;
    } else {
      std::uint32_t d = depth_b + 1;
      for (NodeId u : scratch.frontier_b) {
        adj.backward(u, [&](NodeId v) {
          if (scratch.stamp_b[v] != epoch) {
            scratch.stamp_b[v] = epoch;
            scratch.dist_b[v] = d;
            scratch.next.push_back(v);
            if (scratch.stamp_f[v] == epoch) {
              best = std::min<std::uint64_t>(best, d + scratch.dist_f[v]);
            }
          }
        });
      }
      std::swap(scratch.frontier_b, scratch.next);
      depth_b = d;
    }
    if (best <= static_cast<std::uint64_t>(depth_f) + depth_b) {
      return static_cast<std::uint32_t>(best);
    }
  }
  if (best == kInf) return std::nullopt;
  return static_cast<std::uint32_t>(best);
}

// Complete single-source sweep; dist uses the same epoch-stamp trick.
template <typename Adj>
void full_bfs(const Adj& adj, NodeId s, BfsScratch& scratch) {
  ++scratch.epoch;
  const std::uint64_t epoch = scratch.epoch;
  scratch.frontier_f.assign(1, s);
  scratch.stamp_f[s] = epoch;
  scratch.dist_f[s] = 0;
  std::uint32_t depth = 0;
  while (!scratch.frontier_f.empty()) {
    scratch.next.clear();
    ++depth;
    for (NodeId u : scratch.frontier_f) {
      adj.forward(u, [&](NodeId v) {
        if (scratch.stamp_f[v] != epoch) {
          scratch.stamp_f[v] = epoch;
          scratch.dist_f[v] = depth;
          scratch.next.push_back(v);
        }
      });
    }
    std::swap(scratch.frontier_f, scratch.next);
  }
}

template <typename Adj>
MilgramResult run_milgram_impl(const Adj& adj, NodeId n,
                               const MilgramConfig& config, unsigned threads) {
  if (config.pair_count < 1) {
    throw UsageError("run_milgram: pair_count must be at least 1");
  }
  NodePartition partition = partition_nodes(n, config.seed);

  unsigned workers = resolve_threads(threads);
  struct Partial {
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint64_t failures = 0;
  };
  std::vector<Partial> partials(workers);
  parallel_for_blocks(
      config.pair_count, workers,
      [&](unsigned block, std::size_t begin, std::size_t end) {
        Partial& local = partials[block];
        BfsScratch scratch;
        scratch.ensure(n);
        for (std::size_t trial = begin; trial < end; ++trial) {
          SplitMix64 rng(substream_seed(config.seed, trial));
          NodeId s = partition.set_a[bounded(rng, partition.set_a.size())];
          NodeId t = partition.set_b[bounded(rng, partition.set_b.size())];
          auto d = bidirectional_distance(adj, s, t, scratch);
          if (d) {
            ++local.histogram[*d];
          } else {
            ++local.failures;
          }
        }
      });

  MilgramResult result;
  result.trials = config.pair_count;
  for (const Partial& partial : partials) {
    result.failures += partial.failures;
    for (auto [length, count] : partial.histogram) {
      result.length_histogram[length] += count;
    }
  }
  std::uint64_t length_sum = 0;
  for (auto [length, count] : result.length_histogram) {
    result.successes += count;
    length_sum += static_cast<std::uint64_t>(length) * count;
  }
  result.failure_rate = static_cast<double>(result.failures) /
                        static_cast<double>(result.trials);
  if (result.successes > 0) {
    double mean = static_cast<double>(length_sum) /
                  static_cast<double>(result.successes);
    result.mean_path_length = mean;
    result.mean_rounded = static_cast<std::int64_t>(std::floor(mean + 0.5));
  }
  return result;
}

template <typename Adj>
PathLengthStats exact_between_impl(const Adj& adj, NodeId n,
                                   std::span<const NodeId> sources,
                                   std::span<const NodeId> targets,
                                   unsigned threads, NodeId oracle_bound) {
  if (n > oracle_bound) {
    throw UsageError("exact average path length: graph exceeds the oracle "
                     "bound of " +
                     std::to_string(oracle_bound) + " nodes");
  }
  unsigned workers = resolve_threads(threads);
  std::vector<std::uint64_t> sum_per_source(sources.size(), 0);
  std::vector<std::uint64_t> reached_per_source(sources.size(), 0);
  parallel_for_blocks(
      sources.size(), workers,
      [&](unsigned, std::size_t begin, std::size_t end) {
        BfsScratch scratch;
        scratch.ensure(n);
        for (std::size_t i = begin; i < end; ++i) {
          NodeId s = sources[i];
          full_bfs(adj, s, scratch);
          std::uint64_t sum = 0, reached = 0;
          for (NodeId t : targets) {
            if (t == s) continue;
            if (scratch.stamp_f[t] == scratch.epoch) {
              sum += scratch.dist_f[t];
              ++reached;
            }
          }
          sum_per_source[i] = sum;
          reached_per_source[i] = reached;
        }
      });

  PathLengthStats stats;
  std::uint64_t total_pairs = 0;
  std::uint64_t distance_sum = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    distance_sum += sum_per_source[i];
    stats.reachable_pairs += reached_per_source[i];
  }
  for (NodeId s : sources) {
    total_pairs += targets.size();
    for (NodeId t : targets) {
      if (t == s) --total_pairs;
    }
  }
  stats.unreachable_pairs = total_pairs - stats.reachable_pairs;
  stats.unreachable_fraction =
      total_pairs == 0 ? 0.0
                       : static_cast<double>(stats.unreachable_pairs) /
                             static_cast<double>(total_pairs);
  if (stats.reachable_pairs > 0) {
    stats.mean_geodesic = static_cast<double>(distance_sum) /
                          static_cast<double>(stats.reachable_pairs);
  }
  return stats;
}

std::vector<NodeId> all_nodes(NodeId n) {
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  return nodes;
}

void check_node(NodeId v, NodeId n, const char* role) {
  if (v >= n) {
    throw UsageError(std::string("shortest_path_length: ") + role + " " +
                     std::to_string(v) + " out of range");
  }
}

}  // namespace

NodePartition partition_nodes(NodeId n, std::uint64_t seed) {
  if (n < 2) {
    throw UsageError("partition_nodes: need at least 2 nodes");
  }
  std::vector<NodeId> nodes = all_nodes(n);
  SplitMix64 rng(substream_seed(seed, kPartitionStream));
  deterministic_shuffle(nodes, rng);
  NodeId half = n / 2 + n % 2;
  NodePartition partition;
  partition.set_a.assign(nodes.begin(), nodes.begin() + half);
  partition.set_b.assign(nodes.begin() + half, nodes.end());
  return partition;
}

std::optional<std::uint32_t> shortest_path_length(const UndirectedGraph& graph,
                                                  NodeId source,
                                                  NodeId target) {
  check_node(source, graph.node_count(), "source");
  check_node(target, graph.node_count(), "target");
  if (source == target) {
    throw UsageError("shortest_path_length: source equals target");
  }
  BfsScratch scratch;
  scratch.ensure(graph.node_count());
  return bidirectional_distance(UndirectedAdj{graph}, source, target, scratch);
}

std::optional<std::uint32_t> shortest_path_length(const DirectedGraph& graph,
                                                  NodeId source, NodeId target,
                                                  PathMode mode) {
  check_node(source, graph.node_count(), "source");
  check_node(target, graph.node_count(), "target");
  if (source == target) {
    throw UsageError("shortest_path_length: source equals target");
  }
  BfsScratch scratch;
  scratch.ensure(graph.node_count());
  switch (mode) {
    case PathMode::Directed:
      return bidirectional_distance(DirectedAdj{graph}, source, target,
                                    scratch);
    case PathMode::DirectedAsUndirected:
      return bidirectional_distance(EitherWayAdj{graph}, source, target,
                                    scratch);
    case PathMode::Undirected:
      break;
  }
  throw UsageError(
      "shortest_path_length: undirected mode needs an undirected graph");
}

MilgramResult run_milgram(const UndirectedGraph& graph,
                          const MilgramConfig& config, unsigned threads) {
  if (config.mode != PathMode::Undirected) {
    throw UsageError("run_milgram: directed modes need a directed graph");
  }
  return run_milgram_impl(UndirectedAdj{graph}, graph.node_count(), config,
                          threads);
}

MilgramResult run_milgram(const DirectedGraph& graph,
                          const MilgramConfig& config, unsigned threads) {
  switch (config.mode) {
    case PathMode::Directed:
      return run_milgram_impl(DirectedAdj{graph}, graph.node_count(), config,
                              threads);
    case PathMode::DirectedAsUndirected:
      return run_milgram_impl(EitherWayAdj{graph}, graph.node_count(), config,
                              threads);
    case PathMode::Undirected:
      break;
  }
  throw UsageError("run_milgram: undirected mode needs an undirected graph");
}

PathLengthStats exact_average_path_length(const UndirectedGraph& graph,
                                          unsigned threads,
                                          NodeId oracle_bound) {
  std::vector<NodeId> nodes = all_nodes(graph.node_count());
  return exact_between_impl(UndirectedAdj{graph}, graph.node_count(), nodes,
                            nodes, threads, oracle_bound);
}

PathLengthStats exact_average_path_length(const DirectedGraph& graph,
                                          PathMode mode, unsigned threads,
                                          NodeId oracle_bound) {
  std::vector<NodeId> nodes = all_nodes(graph.node_count());
  switch (mode) {
    case PathMode::Directed:
      return exact_between_impl(DirectedAdj{graph}, graph.node_count(), nodes,
                                nodes, threads, oracle_bound);
    case PathMode::DirectedAsUndirected:
      return exact_between_impl(EitherWayAdj{graph}, graph.node_count(), nodes,
                                nodes, threads, oracle_bound);
    case PathMode::Undirected:
      break;
  }
  throw UsageError(
      "exact_average_path_length: undirected mode needs an undirected graph");
}

PathLengthStats exact_average_path_length_between(
    const UndirectedGraph& graph, std::span<const NodeId> sources,
    std::span<const NodeId> targets, unsigned threads, NodeId oracle_bound) {
  return exact_between_impl(UndirectedAdj{graph}, graph.node_count(), sources,
                            targets, threads, oracle_bound);
}

PathLengthStats exact_average_path_length_between(
    const DirectedGraph& graph, PathMode mode, std::span<const NodeId> sources,
    std::span<const NodeId> targets, unsigned threads, NodeId oracle_bound) {
  switch (mode) {
    case PathMode::Directed:
      return exact_between_impl(DirectedAdj{graph}, graph.node_count(),
                                sources, targets, threads, oracle_bound);
    case PathMode::DirectedAsUndirected:
      return exact_between_impl(EitherWayAdj{graph}, graph.node_count(),
                                sources, targets, threads, oracle_bound);
    case PathMode::Undirected:
      break;
  }
  throw UsageError(
      "exact_average_path_length_between: undirected mode needs an "
      "undirected graph");
}

}  // namespace smallworld
