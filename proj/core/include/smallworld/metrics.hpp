#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "smallworld/graph.hpp"

namespace smallworld {

// Which degree sequence an operation ranks or bins by. Degree applies to
// undirected graphs, In/Out to directed graphs; a mismatch is a UsageError.
enum class DegreeMode { Degree, In, Out };

struct SummaryStats {
  bool directed = false;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  double edges_per_node = 0.0;   // M/N
  double mean_degree = 0.0;      // 2M/N undirected, M/N per direction
  std::uint32_t median_degree = 0;
  double average_clustering = 0.0;
  // Unset when the Pearson coefficient is undefined (zero degree variance).
  std::optional<double> assortativity;      // undirected graphs
  std::optional<double> assortativity_in;   // directed, in-in
  std::optional<double> assortativity_out;  // directed, out-out
};

struct DegreeHistogram {
  DegreeMode mode = DegreeMode::Degree;
  std::map<std::uint32_t, std::uint64_t> bins;  // degree value -> node count
};

// Fraction of v's neighbor pairs that are themselves adjacent; 0 when
// deg(v) < 2. Invalid v -> std::out_of_range.
double local_clustering(const UndirectedGraph& graph, NodeId v);

// Unweighted mean of local_clustering over all nodes (degree-<2 nodes count
// as 0). Empty graph -> UndefinedStatisticError. The reduction order is
// fixed, so the result is identical for any worker count.
double average_clustering(const UndirectedGraph& graph, unsigned threads = 0);

// Pearson correlation of endpoint degrees over the 2M ordered endpoint
// pairs (each edge contributes both orientations). Zero degree variance
// (e.g. regular graphs) -> UndefinedAssortativityError; M = 0 -> UsageError.
double degree_assortativity(const UndirectedGraph& graph);

enum class AssortativityMode { InIn, OutOut };

// Pearson correlation over the M directed edges of (d(u), d(v)) where d is
// indegree (InIn) or outdegree (OutOut). Zero variance on either coordinate
// -> UndefinedAssortativityError; M = 0 -> UsageError.
double directed_assortativity(const DirectedGraph& graph,
                              AssortativityMode mode);

// Degree counts, median (lower median on even counts), clustering, and the
// defined assortativity coefficients. Directed clustering is computed on the
// edge-direction-ignored view. Empty graph -> UndefinedStatisticError.
SummaryStats summary_stats(const UndirectedGraph& graph, unsigned threads = 0);
SummaryStats summary_stats(const DirectedGraph& graph, unsigned threads = 0);

// bins[d] = number of nodes with degree d. Mode must match the graph kind.
DegreeHistogram degree_histogram(const UndirectedGraph& graph,
                                 DegreeMode mode = DegreeMode::Degree);
DegreeHistogram degree_histogram(const DirectedGraph& graph, DegreeMode mode);

}  // namespace smallworld
