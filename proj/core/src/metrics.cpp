#include "smallworld/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "smallworld/errors.hpp"
#include "smallworld/parallel.hpp"

namespace smallworld {

namespace {

std::uint64_t sorted_intersection_size(std::span<const NodeId> a,
                                       std::span<const NodeId> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double local_clustering_unchecked(const UndirectedGraph& graph, NodeId v) {
  std::uint32_t deg = graph.degree(v);
  if (deg < 2) return 0.0;
  auto adj = graph.neighbors(v);
  // Each edge between two neighbors of v is counted once from each endpoint,
  // which is exactly the 2*triangles numerator.
  std::uint64_t closed = 0;
  for (NodeId u : adj) closed += sorted_intersection_size(adj, graph.neighbors(u));
  return static_cast<double>(closed) /
         (static_cast<double>(deg) * (deg - 1));
}

std::uint32_t lower_median(std::vector<std::uint32_t> values) {
  std::size_t k = (values.size() - 1) / 2;
  std::nth_element(values.begin(),
                   values.begin() + static_cast<std::ptrdiff_t>(k),
                   values.end());
  return values[k];
}

}  // namespace

double local_clustering(const UndirectedGraph& graph, NodeId v) {
  if (v >= graph.node_count()) {
    throw std::out_of_range("local_clustering: node id " + std::to_string(v) +
                            " out of range");
  }
  return local_clustering_unchecked(graph, v);
}

double average_clustering(const UndirectedGraph& graph, unsigned threads) {
  NodeId n = graph.node_count();
  if (n == 0) {
    throw UndefinedStatisticError("average_clustering: empty graph");
  }
  std::vector<double> per_node(n);
  parallel_for_blocks(n, resolve_threads(threads),
                      [&](unsigned, std::size_t begin, std::size_t end) {
                        for (std::size_t v = begin; v < end; ++v) {
                          per_node[v] = local_clustering_unchecked(
                              graph, static_cast<NodeId>(v));
                        }
                      });
  // Summed sequentially in node order so the value does not depend on the
  // worker count.
  double sum = 0.0;
  for (double c : per_node) sum += c;
  return sum / static_cast<double>(n);
}

double degree_assortativity(const UndirectedGraph& graph) {
  if (graph.edge_count() == 0) {
    throw UsageError("degree_assortativity: graph has no edges");
  }
  // Over the 2M ordered pairs the two coordinates have identical marginals,
  // so Pearson reduces to one sum of squares; kept in integers, which makes
  // the zero-variance test and the star-graph -1 exact.
  using Wide = __int128;
  std::uint64_t pairs = 2 * graph.edge_count();
  Wide sum_x = 0, sum_xx = 0, sum_xy = 0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    std::uint64_t du = graph.degree(u);
    sum_x += Wide(du) * du;  // deg(u) appears in deg(u) ordered pairs
    sum_xx += Wide(du) * du * du;
    std::uint64_t row = 0;
    for (NodeId v : graph.neighbors(u)) row += graph.degree(v);
    sum_xy += Wide(du) * row;
  }
  Wide numerator = Wide(pairs) * sum_xy - sum_x * sum_x;
  Wide denominator = Wide(pairs) * sum_xx - sum_x * sum_x;
  if (denominator == 0) {
    throw UndefinedAssortativityError(
        "degree_assortativity: zero degree variance");
  }
  return static_cast<double>(static_cast<long double>(numerator) /
                             static_cast<long double>(denominator));
}

double directed_assortativity(const DirectedGraph& graph,
                              AssortativityMode mode) {
  std::uint64_t m = graph.edge_count();
  if (m == 0) {
    throw UsageError("directed_assortativity: graph has no edges");
  }
  auto d = [&](NodeId v) -> std::uint64_t {
    return mode == AssortativityMode::InIn ? graph.in_degree(v)
                                           : graph.out_degree(v);
  };
  using Wide = __int128;
  Wide sum_x = 0, sum_y = 0, sum_xx = 0, sum_yy = 0, sum_xy = 0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    std::uint64_t du = d(u);
    for (NodeId v : graph.out_neighbors(u)) {
      std::uint64_t dv = d(v);
      sum_x += du;
      sum_y += dv;
      sum_xx += Wide(du) * du;
      sum_yy += Wide(dv) * dv;
      sum_xy += Wide(du) * dv;
    }
  }
  Wide var_x = Wide(m) * sum_xx - sum_x * sum_x;
  Wide var_y = Wide(m) * sum_yy - sum_y * sum_y;
  if (var_x == 0 || var_y == 0) {
    throw UndefinedAssortativityError(
        "directed_assortativity: zero variance on one coordinate");
  }
  Wide cov = Wide(m) * sum_xy - sum_x * sum_y;
  long double r = static_cast<long double>(cov) /
                  std::sqrt(static_cast<long double>(var_x) *
                            static_cast<long double>(var_y));
  return static_cast<double>(r);
}

SummaryStats summary_stats(const UndirectedGraph& graph, unsigned threads) {
  NodeId n = graph.node_count();
  if (n == 0) {
    throw UndefinedStatisticError("summary_stats: empty graph");
  }
  SummaryStats stats;
  stats.directed = false;
  stats.node_count = n;
  stats.edge_count = graph.edge_count();
  stats.edges_per_node =
      static_cast<double>(stats.edge_count) / static_cast<double>(n);
  stats.mean_degree =
      2.0 * static_cast<double>(stats.edge_count) / static_cast<double>(n);
  std::vector<std::uint32_t> degrees(n);
  for (NodeId v = 0; v < n; ++v) degrees[v] = graph.degree(v);
  stats.median_degree = lower_median(std::move(degrees));
  stats.average_clustering = average_clustering(graph, threads);
  if (stats.edge_count > 0) {
    try {
      stats.assortativity = degree_assortativity(graph);
    } catch (const UndefinedAssortativityError&) {
    }
  }
  return stats;
}

SummaryStats summary_stats(const DirectedGraph& graph, unsigned threads) {
  NodeId n = graph.node_count();
  if (n == 0) {
    throw UndefinedStatisticError("summary_stats: empty graph");
  }
  SummaryStats stats;
  stats.directed = true;
  stats.node_count = n;
  stats.edge_count = graph.edge_count();
  stats.edges_per_node =
      static_cast<double>(stats.edge_count) / static_cast<double>(n);
  stats.mean_degree = stats.edges_per_node;
  // Median of the total (in + out) degree sequence; the per-direction means
  // are both mean_degree already.
  std::vector<std::uint32_t> degrees(n);
  for (NodeId v = 0; v < n; ++v) {
    degrees[v] = graph.in_degree(v) + graph.out_degree(v);
  }
  stats.median_degree = lower_median(std::move(degrees));
  stats.average_clustering = average_clustering(undirected_view(graph), threads);
  if (stats.edge_count > 0) {
    try {
      stats.assortativity_in =
          directed_assortativity(graph, AssortativityMode::InIn);
    } catch (const UndefinedAssortativityError&) {
    }
    try {
      stats.assortativity_out =
          directed_assortativity(graph, AssortativityMode::OutOut);
    } catch (const UndefinedAssortativityError&) {
    }
  }
  return stats;
}

DegreeHistogram degree_histogram(const UndirectedGraph& graph,
                                 DegreeMode mode) {
  if (mode != DegreeMode::Degree) {
    throw UsageError("degree_histogram: in/out modes require a directed graph");
  }
  DegreeHistogram hist;
  hist.mode = mode;
  for (NodeId v = 0; v < graph.node_count(); ++v) ++hist.bins[graph.degree(v)];
  return hist;
}

DegreeHistogram degree_histogram(const DirectedGraph& graph, DegreeMode mode) {
  if (mode == DegreeMode::Degree) {
    throw UsageError(
        "degree_histogram: degree mode requires an undirected graph");
  }
  DegreeHistogram hist;
  hist.mode = mode;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    ++hist.bins[mode == DegreeMode::In ? graph.in_degree(v)
                                       : graph.out_degree(v)];
  }
  return hist;
}

}  // namespace smallworld
