#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace smallworld {

using NodeId = std::uint32_t;

// Bijection between external node tokens and dense indices 0..N-1.
// Tokens are opaque: non-empty, whitespace-free strings. Dense indices are
// assigned in first-appearance order.
class IdMap {
 public:
  NodeId insert_or_get(std::string_view token);
  std::optional<NodeId> find(std::string_view token) const;
  const std::string& token_of(NodeId index) const;  // throws std::out_of_range
  NodeId size() const { return static_cast<NodeId>(reverse_.size()); }

  // Map where node i has token "i". Used for generated graphs.
  static IdMap identity(NodeId node_count);

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct Eq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const {
      return a == b;
    }
  };

  std::unordered_map<std::string, NodeId, Hash, Eq> forward_;
  std::vector<std::string> reverse_;
};

// Simple edge set over dense indices: self-loop-free, duplicate-free
// (unordered pairs in undirected mode, ordered pairs in directed mode).
struct EdgeList {
  bool directed = false;
  NodeId node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t collapsed_duplicates = 0;
};

struct ParsedEdgeList {
  EdgeList edges;
  IdMap ids;
};

// Whitespace-separated two-column edge list. Blank lines and lines whose
// first non-blank character is '#' are skipped; tokens beyond the second are
// ignored; a line with exactly one token is a ParseError carrying the line
// number. Empty input yields an empty graph. Accepts LF and CRLF.
ParsedEdgeList parse_edge_list(std::istream& in, bool directed);

// Same, from a file. Missing or unreadable file -> DataError with the path.
ParsedEdgeList parse_edge_list_file(const std::filesystem::path& path,
                                    bool directed);

// Immutable compact-adjacency undirected graph.
// Invariants: neighbor lists sorted ascending, self-loop-free, symmetric;
// sum of degrees equals 2M.
class UndirectedGraph {
 public:
  UndirectedGraph() : offsets_(1, 0) {}

  NodeId node_count() const { return node_count_; }
  std::uint64_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  const IdMap& ids() const { return ids_; }

 private:
  friend UndirectedGraph build_undirected(const EdgeList&, IdMap);

  NodeId node_count_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> offsets_;  // size N+1
  std::vector<NodeId> targets_;         // size 2M
  IdMap ids_;
};

// Immutable compact-adjacency directed graph with both orientations stored.
// Invariants: both adjacencies sorted, self-loop-free, describe the same
// edge set; sum of out-degrees = sum of in-degrees = M.
class DirectedGraph {
 public:
  DirectedGraph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

  NodeId node_count() const { return node_count_; }
  std::uint64_t edge_count() const { return edge_count_; }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }
  std::uint32_t out_degree(NodeId v) const {
    return static_cast<std::uint32_t>(out_offsets_[v + 1] - out_offsets_[v]);
  }
  std::uint32_t in_degree(NodeId v) const {
    return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
  }

  const IdMap& ids() const { return ids_; }

 private:
  friend DirectedGraph build_directed(const EdgeList&, IdMap);

  NodeId node_count_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> out_offsets_;
  std::vector<NodeId> out_targets_;
  std::vector<std::uint64_t> in_offsets_;
  std::vector<NodeId> in_targets_;
  IdMap ids_;
};

// Builders reject an EdgeList whose directedness does not match (UsageError).
// Construction is deterministic given the input order.
UndirectedGraph build_undirected(const EdgeList& edges, IdMap ids);
DirectedGraph build_directed(const EdgeList& edges, IdMap ids);

// Edge {u,v} present iff (u,v) or (v,u) is present; antiparallel pairs
// collapse to one undirected edge. The id map is preserved.
UndirectedGraph undirected_view(const DirectedGraph& graph);

// parse + build in one step.
UndirectedGraph load_undirected(const std::filesystem::path& path);
DirectedGraph load_directed(const std::filesystem::path& path);

}  // namespace smallworld
