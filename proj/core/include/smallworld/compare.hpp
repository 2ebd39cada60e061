#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smallworld/graph.hpp"
#include "smallworld/metrics.hpp"

namespace smallworld {

struct RankedNode {
  std::string external_id;
  std::uint64_t value = 0;
};

struct RankRow {
  std::string external_id;
  std::uint64_t primary_value = 0;
  // Unset when the node does not exist in the cross graph. Absence is data,
  // not an error; it renders as "None" in CSV.
  std::optional<std::uint64_t> cross_value;
};

struct CompareTable {
  bool primary_directed = false;  // ranked by indegree if true, else degree
  bool cross_directed = false;    // looked up by indegree if true, else degree
  std::uint64_t k = 0;
  std::vector<RankRow> rows;  // min(k, N) rows, primary_value descending
  // |intersection of the two top-k id sets| / |rows|; 1.0 on identical
  // graphs.
  double rank_overlap = 0.0;
};

// The k highest-valued nodes, descending; ties broken by ascending external
// id (byte order), so the ranking is total and top-k is always a prefix of
// top-(k+1). k < 1 -> UsageError; mode must match the graph kind.
std::vector<RankedNode> top_k(const UndirectedGraph& graph, std::uint64_t k,
                              DegreeMode mode = DegreeMode::Degree);
std::vector<RankedNode> top_k(const DirectedGraph& graph, std::uint64_t k,
                              DegreeMode mode);

// Ranks the primary graph's top k (undirected: by degree, directed: by
// indegree) and looks each node up in the cross graph by external id,
// reporting the cross graph's value of the same kind. The two graphs are
// expected to share an id namespace; ids missing from the cross graph get
// an unset cross_value.
CompareTable cross_rank_table(const UndirectedGraph& primary,
                              const DirectedGraph& cross, std::uint64_t k);
CompareTable cross_rank_table(const DirectedGraph& primary,
                              const UndirectedGraph& cross, std::uint64_t k);
// Same-kind comparisons (useful for self-checks and A/B graph versions).
CompareTable cross_rank_table(const UndirectedGraph& primary,
                              const UndirectedGraph& cross, std::uint64_t k);
CompareTable cross_rank_table(const DirectedGraph& primary,
                              const DirectedGraph& cross, std::uint64_t k);

}  // namespace smallworld
