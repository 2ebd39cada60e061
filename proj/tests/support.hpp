#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallworld/graph.hpp"

// Shared plumbing for the test binaries: graph literals, structural
// validators, scratch directories, and child-process capture.
namespace support {

inline smallworld::UndirectedGraph make_undirected(
    smallworld::NodeId n,
    std::vector<std::pair<smallworld::NodeId, smallworld::NodeId>> edges) {
  smallworld::EdgeList list;
  list.directed = false;
  list.node_count = n;
  list.edges = std::move(edges);
  return build_undirected(list, smallworld::IdMap::identity(n));
}

inline smallworld::DirectedGraph make_directed(
    smallworld::NodeId n,
    std::vector<std::pair<smallworld::NodeId, smallworld::NodeId>> edges) {
  smallworld::EdgeList list;
  list.directed = true;
  list.node_count = n;
  list.edges = std::move(edges);
  return build_directed(list, smallworld::IdMap::identity(n));
}

// Structural invariants; returns a description of the first violation.
inline std::optional<std::string> validate(
    const smallworld::UndirectedGraph& g) {
  std::uint64_t degree_sum = 0;
  for (smallworld::NodeId v = 0; v < g.node_count(); ++v) {
    auto adj = g.neighbors(v);
    degree_sum += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] >= g.node_count()) return "neighbor out of range";
      if (adj[i] == v) return "self loop";
      if (i > 0 && adj[i - 1] >= adj[i]) return "unsorted or duplicate";
      auto back = g.neighbors(adj[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        return "asymmetric edge";
      }
    }
  }
  if (degree_sum != 2 * g.edge_count()) return "degree sum != 2M";
  return std::nullopt;
}

inline std::optional<std::string> validate(
    const smallworld::DirectedGraph& g) {
  std::uint64_t out_sum = 0, in_sum = 0;
  for (smallworld::NodeId v = 0; v < g.node_count(); ++v) {
    auto out = g.out_neighbors(v);
    out_sum += out.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] >= g.node_count()) return "neighbor out of range";
      if (out[i] == v) return "self loop";
      if (i > 0 && out[i - 1] >= out[i]) return "unsorted or duplicate";
      auto in = g.in_neighbors(out[i]);
      if (!std::binary_search(in.begin(), in.end(), v)) {
        return "out edge missing from in adjacency";
      }
    }
    in_sum += g.in_neighbors(v).size();
  }
  if (out_sum != g.edge_count() || in_sum != g.edge_count()) {
    return "adjacency sizes != M";
  }
  return std::nullopt;
}

// Unique scratch directory, removed with everything in it on destruction.
class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0;; ++attempt) {
      path_ = base / ("smallworld-test-" + std::to_string(::getpid()) + "-" +
                      std::to_string(attempt));
      if (std::filesystem::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Writes a dense-id graph as an edge list. Nodes that touch no edge are
// declared through self-loop lines, which register the id and are then
// dropped by the parser.
inline void write_edge_list(
    const std::filesystem::path& path, smallworld::NodeId n,
    const std::vector<std::pair<smallworld::NodeId, smallworld::NodeId>>&
        edges) {
  std::ofstream out(path, std::ios::binary);
  std::vector<bool> seen(n, false);
  for (const auto& [u, v] : edges) {
    out << u << " " << v << "\n";
    seen[u] = seen[v] = true;
  }
  for (smallworld::NodeId v = 0; v < n; ++v) {
    if (!seen[v]) out << v << " " << v << "\n";
  }
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // captured stdout
};

// Runs through the shell and captures stdout; stderr passes through unless
// the command redirects it.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = ::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace support
