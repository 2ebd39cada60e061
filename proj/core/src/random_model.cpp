#include "smallworld/random_model.hpp"

#include <cmath>

#include "smallworld/errors.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/rng.hpp"

namespace smallworld {

namespace {

// Pairs (i,j), i < j, enumerated row-major: index(i,j) = i*(2n-i-1)/2 + j-i-1.
// Inverts that index with one float sqrt plus exact integer correction.
std::pair<NodeId, NodeId> pair_at(std::uint64_t k, std::uint64_t n) {
  std::uint64_t b = 2 * n - 1;
  std::uint64_t disc = b * b - 8 * k;
  auto row_start = [&](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  std::uint64_t i = static_cast<std::uint64_t>(
      (static_cast<double>(b) - std::sqrt(static_cast<double>(disc))) / 2.0);
  while (i > 0 && row_start(i) > k) --i;
  while (row_start(i + 1) <= k) ++i;
  std::uint64_t j = i + 1 + (k - row_start(i));
  return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

}  // namespace

UndirectedGraph er_generate(const ErParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw UsageError("er_generate: p must lie in [0, 1]");
  }
  EdgeList list;
  list.directed = false;
  list.node_count = params.n;

  std::uint64_t n = params.n;
  std::uint64_t total_pairs = n * (n - 1) / 2;
  if (n >= 2 && params.p > 0.0) {
    if (params.p >= 1.0) {
      list.edges.reserve(total_pairs);
      for (NodeId i = 0; i + 1 < params.n; ++i) {
        for (NodeId j = i + 1; j < params.n; ++j) list.edges.emplace_back(i, j);
      }
    } else {
      list.edges.reserve(static_cast<std::size_t>(
          static_cast<double>(total_pairs) * params.p * 1.05) + 16);
      SplitMix64 rng(params.seed);
      double log_q = std::log1p(-params.p);
      std::uint64_t k = 0;
      while (true) {
        // Skip = failures before the next success, geometric via inverse CDF.
        double u = rng.next_unit();
        double skip = std::floor(std::log1p(-u) / log_q);
        if (skip >= static_cast<double>(total_pairs - k)) break;
        k += static_cast<std::uint64_t>(skip);
        if (k >= total_pairs) break;
        list.edges.push_back(pair_at(k, n));
        if (++k >= total_pairs) break;
      }
    }
  }
  return build_undirected(list, IdMap::identity(params.n));
}

ErBaseline matched_er_baseline(const UndirectedGraph& graph,
                               std::uint64_t seed, unsigned threads) {
  std::uint64_t n = graph.node_count();
  if (n < 2) {
    throw UsageError("matched_er_baseline: need at least 2 nodes");
  }
  ErBaseline baseline;
  baseline.params.n = graph.node_count();
  baseline.params.p = 2.0 * static_cast<double>(graph.edge_count()) /
                      (static_cast<double>(n) * static_cast<double>(n - 1));
  baseline.params.seed = seed;
  baseline.graph = er_generate(baseline.params);
  baseline.baseline_clustering = average_clustering(baseline.graph, threads);
  return baseline;
}

}  // namespace smallworld
