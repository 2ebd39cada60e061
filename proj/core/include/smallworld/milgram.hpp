#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "smallworld/graph.hpp"

namespace smallworld {

// How edges are traversed when measuring geodesics. Undirected applies to
// undirected graphs; Directed follows out-edges only and
// DirectedAsUndirected walks directed edges both ways.
enum class PathMode { Undirected, Directed, DirectedAsUndirected };

struct MilgramConfig {
  std::uint64_t pair_count = 1;
  std::uint64_t seed = 0;
  PathMode mode = PathMode::Undirected;
};

struct MilgramResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  double failure_rate = 0.0;
  // Mean geodesic over successful chains only; unset when every chain failed.
  std::optional<double> mean_path_length;
  std::optional<std::int64_t> mean_rounded;  // round half up
  std::map<std::uint32_t, std::uint64_t> length_histogram;
};

struct NodePartition {
  std::vector<NodeId> set_a;  // |A| = ceil(N/2)
  std::vector<NodeId> set_b;
};

struct PathLengthStats {
  // Mean geodesic over reachable ordered pairs with source != target; unset
  // when no pair is reachable.
  std::optional<double> mean_geodesic;
  double unreachable_fraction = 0.0;
  std::uint64_t reachable_pairs = 0;
  std::uint64_t unreachable_pairs = 0;
};

// Splits nodes 0..n-1 into two disjoint halves, uniformly at random given
// the seed. The partition stream is independent of the per-trial streams
// derived from the same seed. n < 2 -> UsageError.
NodePartition partition_nodes(NodeId n, std::uint64_t seed);

// BFS hop count of a shortest path; nullopt when target is unreachable.
// source == target -> UsageError (never sampled, since A and B are
// disjoint). Searches from both endpoints at once, which is what keeps
// per-pair queries affordable on graphs this library targets; no index is
// built and the returned count equals plain BFS exactly.
std::optional<std::uint32_t> shortest_path_length(const UndirectedGraph& graph,
                                                  NodeId source, NodeId target);
std::optional<std::uint32_t> shortest_path_length(const DirectedGraph& graph,
                                                  NodeId source, NodeId target,
                                                  PathMode mode);

// The repeated-sampling chain experiment: partition nodes into A/B, draw
// pair_count (source from A, target from B) pairs with replacement, measure
// each geodesic, and aggregate. Each trial's randomness is derived from
// (seed, trial index) alone, so results are identical for any worker count.
// Mode must match the graph kind.
MilgramResult run_milgram(const UndirectedGraph& graph,
                          const MilgramConfig& config, unsigned threads = 0);
MilgramResult run_milgram(const DirectedGraph& graph,
                          const MilgramConfig& config, unsigned threads = 0);

// Exhaustive BFS from every node: the exact mean geodesic over reachable
// ordered pairs and the unreachable fraction over all N(N-1) ordered pairs.
// O(N(N+M)), so refuses graphs larger than oracle_bound (UsageError).
PathLengthStats exact_average_path_length(const UndirectedGraph& graph,
                                          unsigned threads = 0,
                                          NodeId oracle_bound = 2000);
PathLengthStats exact_average_path_length(const DirectedGraph& graph,
                                          PathMode mode, unsigned threads = 0,
                                          NodeId oracle_bound = 2000);

// Same statistics restricted to ordered pairs (s, t) with s in sources,
// t in targets, s != t.
PathLengthStats exact_average_path_length_between(
    const UndirectedGraph& graph, std::span<const NodeId> sources,
    std::span<const NodeId> targets, unsigned threads = 0,
    NodeId oracle_bound = 2000);
PathLengthStats exact_average_path_length_between(
    const DirectedGraph& graph, PathMode mode, std::span<const NodeId> sources,
    std::span<const NodeId> targets, unsigned threads = 0,
    NodeId oracle_bound = 2000);

}  // namespace smallworld
