#include "smallworld/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "smallworld/errors.hpp"

namespace smallworld {

NodeId IdMap::insert_or_get(std::string_view token) {
  auto it = forward_.find(token);
  if (it != forward_.end()) return it->second;
  NodeId index = static_cast<NodeId>(reverse_.size());
  reverse_.emplace_back(token);
  forward_.emplace(reverse_.back(), index);
  return index;
}

std::optional<NodeId> IdMap::find(std::string_view token) const {
  auto it = forward_.find(token);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

const std::string& IdMap::token_of(NodeId index) const {
  return reverse_.at(index);
}

IdMap IdMap::identity(NodeId node_count) {
  IdMap map;
  map.reverse_.reserve(node_count);
  map.forward_.reserve(node_count);
  for (NodeId i = 0; i < node_count; ++i) {
    map.reverse_.push_back(std::to_string(i));
    map.forward_.emplace(map.reverse_.back(), i);
  }
  return map;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// First two whitespace-separated tokens of a line. Returns the token count
// capped at 2, or 3 if extra tokens follow (extras are legal and ignored).
int split_tokens(std::string_view line, std::string_view& a,
                 std::string_view& b) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && is_space(line[i])) ++i;
  };
  auto take = [&] {
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    return line.substr(start, i - start);
  };
  skip_ws();
  if (i == line.size()) return 0;
  a = take();
  skip_ws();
  if (i == line.size()) return 1;
  b = take();
  skip_ws();
  return i == line.size() ? 2 : 3;
}

std::uint64_t pack_pair(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

ParsedEdgeList parse_edge_list(std::istream& in, bool directed) {
  ParsedEdgeList result;
  result.edges.directed = directed;

  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view(line);
    std::size_t first = 0;
    while (first < view.size() && is_space(view[first])) ++first;
    if (first == view.size() || view[first] == '#') continue;

    std::string_view a, b;
    int tokens = split_tokens(view, a, b);
    if (tokens == 1) {
      throw ParseError(line_number, "expected two node tokens, found one");
    }

    NodeId u = result.ids.insert_or_get(a);
    NodeId v = result.ids.insert_or_get(b);
    if (u == v) {
      ++result.edges.dropped_self_loops;
      continue;
    }
    std::uint64_t key = directed ? pack_pair(u, v)
                                 : pack_pair(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second) {
      ++result.edges.collapsed_duplicates;
      continue;
    }
    result.edges.edges.emplace_back(u, v);
  }
  result.edges.node_count = result.ids.size();
  return result;
}

ParsedEdgeList parse_edge_list_file(const std::filesystem::path& path,
                                    bool directed) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open edge list: " + path.string());
  }
  return parse_edge_list(in, directed);
}

namespace {

// Counting-sort CSR construction; each (u,v) lands once per endpoint handed
// in. Neighbor lists come out sorted by a final per-node sort.
void fill_adjacency(NodeId node_count,
                    const std::vector<std::pair<NodeId, NodeId>>& edges,
                    bool both_endpoints, bool reversed,
                    std::vector<std::uint64_t>& offsets,
                    std::vector<NodeId>& targets) {
  offsets.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (both_endpoints) {
      ++offsets[u + 1];
      ++offsets[v + 1];
    } else {
      ++offsets[(reversed ? v : u) + 1];
    }
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  targets.resize(offsets.back());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    if (both_endpoints) {
      targets[cursor[u]++] = v;
      targets[cursor[v]++] = u;
    } else if (reversed) {
      targets[cursor[v]++] = u;
    } else {
      targets[cursor[u]++] = v;
    }
  }
  for (NodeId v = 0; v < node_count; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

}  // namespace

UndirectedGraph build_undirected(const EdgeList& edges, IdMap ids) {
  if (edges.directed) {
    throw UsageError("build_undirected requires an undirected edge list");
  }
  UndirectedGraph g;
  g.node_count_ = edges.node_count;
  g.edge_count_ = edges.edges.size();
  g.ids_ = std::move(ids);
  fill_adjacency(edges.node_count, edges.edges, /*both_endpoints=*/true,
                 /*reversed=*/false, g.offsets_, g.targets_);
  return g;
}

DirectedGraph build_directed(const EdgeList& edges, IdMap ids) {
  if (!edges.directed) {
    throw UsageError("build_directed requires a directed edge list");
  }
  DirectedGraph g;
  g.node_count_ = edges.node_count;
  g.edge_count_ = edges.edges.size();
  g.ids_ = std::move(ids);
  fill_adjacency(edges.node_count, edges.edges, /*both_endpoints=*/false,
                 /*reversed=*/false, g.out_offsets_, g.out_targets_);
  fill_adjacency(edges.node_count, edges.edges, /*both_endpoints=*/false,
                 /*reversed=*/true, g.in_offsets_, g.in_targets_);
  return g;
}

UndirectedGraph undirected_view(const DirectedGraph& graph) {
  EdgeList list;
  list.directed = false;
  list.node_count = graph.node_count();
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(graph.edge_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (NodeId v : graph.out_neighbors(u)) {
      pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  list.edges = std::move(pairs);

  IdMap ids;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    ids.insert_or_get(graph.ids().token_of(v));
  }
  return build_undirected(list, std::move(ids));
}

UndirectedGraph load_undirected(const std::filesystem::path& path) {
  ParsedEdgeList parsed = parse_edge_list_file(path, /*directed=*/false);
  return build_undirected(parsed.edges, std::move(parsed.ids));
}

DirectedGraph load_directed(const std::filesystem::path& path) {
  ParsedEdgeList parsed = parse_edge_list_file(path, /*directed=*/true);
  return build_directed(parsed.edges, std::move(parsed.ids));
}

}  // namespace smallworld
