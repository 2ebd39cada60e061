#include "smallworld/compare.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>
#include <unordered_set>

#include "smallworld/errors.hpp"

namespace smallworld {

namespace {

std::uint64_t ranking_value(const UndirectedGraph& g, NodeId v) {
  return g.degree(v);
}

std::uint64_t ranking_value(const DirectedGraph& g, NodeId v) {
  return g.in_degree(v);
}

template <typename Graph>
std::vector<RankedNode> ranked_prefix(const Graph& graph, std::uint64_t k) {
  NodeId n = graph.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::size_t take = static_cast<std::size_t>(
      std::min<std::uint64_t>(k, n));
  std::partial_sort(order.begin(),
                    order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), [&](NodeId a, NodeId b) {
                      std::uint64_t va = ranking_value(graph, a);
                      std::uint64_t vb = ranking_value(graph, b);
                      if (va != vb) return va > vb;
                      return graph.ids().token_of(a) < graph.ids().token_of(b);
                    });
  std::vector<RankedNode> result;
  result.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    result.push_back(
        {graph.ids().token_of(order[i]), ranking_value(graph, order[i])});
  }
  return result;
}

template <typename Graph>
std::vector<RankedNode> top_k_by_mode(const Graph& graph, std::uint64_t k,
                                      DegreeMode mode) {
  if (k < 1) throw UsageError("top_k: k must be at least 1");
  constexpr bool directed = std::is_same_v<Graph, DirectedGraph>;
  if constexpr (directed) {
    if (mode == DegreeMode::Degree) {
      throw UsageError("top_k: degree mode requires an undirected graph");
    }
  } else {
    if (mode != DegreeMode::Degree) {
      throw UsageError("top_k: in/out modes require a directed graph");
    }
  }
  NodeId n = graph.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  auto value_of = [&](NodeId v) -> std::uint64_t {
    if constexpr (directed) {
      return mode == DegreeMode::In ? graph.in_degree(v) : graph.out_degree(v);
    } else {
      return graph.degree(v);
    }
  };
  std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(k, n));
  std::partial_sort(order.begin(),
                    order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), [&](NodeId a, NodeId b) {
                      std::uint64_t va = value_of(a);
                      std::uint64_t vb = value_of(b);
                      if (va != vb) return va > vb;
                      return graph.ids().token_of(a) < graph.ids().token_of(b);
                    });
  std::vector<RankedNode> result;
  result.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    result.push_back({graph.ids().token_of(order[i]), value_of(order[i])});
  }
  return result;
}

template <typename Primary, typename Cross>
CompareTable cross_rank_table_impl(const Primary& primary, const Cross& cross,
                                   std::uint64_t k) {
  if (k < 1) throw UsageError("cross_rank_table: k must be at least 1");
  CompareTable table;
  table.primary_directed = std::is_same_v<Primary, DirectedGraph>;
  table.cross_directed = std::is_same_v<Cross, DirectedGraph>;
  table.k = k;

  std::vector<RankedNode> primary_top = ranked_prefix(primary, k);
  table.rows.reserve(primary_top.size());
  for (const RankedNode& entry : primary_top) {
    RankRow row;
    row.external_id = entry.external_id;
    row.primary_value = entry.value;
    if (auto node = cross.ids().find(entry.external_id)) {
      row.cross_value = ranking_value(cross, *node);
    }
    table.rows.push_back(std::move(row));
  }

  std::vector<RankedNode> cross_top = ranked_prefix(cross, k);
  std::unordered_set<std::string_view> cross_ids;
  cross_ids.reserve(cross_top.size());
  for (const RankedNode& entry : cross_top) {
    cross_ids.insert(entry.external_id);
  }
  std::uint64_t shared = 0;
  for (const RankRow& row : table.rows) {
    if (cross_ids.count(row.external_id)) ++shared;
  }
  table.rank_overlap = table.rows.empty()
                           ? 0.0
                           : static_cast<double>(shared) /
                                 static_cast<double>(table.rows.size());
  return table;
}

}  // namespace

std::vector<RankedNode> top_k(const UndirectedGraph& graph, std::uint64_t k,
                              DegreeMode mode) {
  return top_k_by_mode(graph, k, mode);
}

std::vector<RankedNode> top_k(const DirectedGraph& graph, std::uint64_t k,
                              DegreeMode mode) {
  return top_k_by_mode(graph, k, mode);
}

CompareTable cross_rank_table(const UndirectedGraph& primary,
                              const DirectedGraph& cross, std::uint64_t k) {
  return cross_rank_table_impl(primary, cross, k);
}

CompareTable cross_rank_table(const DirectedGraph& primary,
                              const UndirectedGraph& cross, std::uint64_t k) {
  return cross_rank_table_impl(primary, cross, k);
}

CompareTable cross_rank_table(const UndirectedGraph& primary,
                              const UndirectedGraph& cross, std::uint64_t k) {
  return cross_rank_table_impl(primary, cross, k);
}

CompareTable cross_rank_table(const DirectedGraph& primary,
                              const DirectedGraph& cross, std::uint64_t k) {
  return cross_rank_table_impl(primary, cross, k);
}

}  // namespace smallworld
