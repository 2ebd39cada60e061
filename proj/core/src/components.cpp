#include "smallworld/components.hpp"

#include <algorithm>
#include <numeric>

#include "smallworld/errors.hpp"

namespace smallworld {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(NodeId n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId v) {
    NodeId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      NodeId next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint64_t> size_;
};

// Renumbers raw per-node component ids so labels run 0..k-1 ordered by size
// descending, ties by the component's first node. raw ids must be the id of
// some member node (roots or DFS representatives both qualify).
ComponentLabeling finalize(ComponentKind kind, std::vector<NodeId> raw) {
  ComponentLabeling out;
  out.kind = kind;

  std::size_t n = raw.size();
  std::vector<NodeId> first_seen;   // raw id -> dense discovery index
  std::vector<NodeId> dense(n, 0);  // node -> discovery index
  std::vector<std::uint64_t> size_of;
  std::vector<NodeId> representative(n, n ? static_cast<NodeId>(n) : 0);
  for (std::size_t v = 0; v < n; ++v) {
    NodeId r = raw[v];
    if (representative[r] == static_cast<NodeId>(n)) {
      representative[r] = static_cast<NodeId>(first_seen.size());
      first_seen.push_back(r);
      size_of.push_back(0);
    }
    dense[v] = representative[r];
    ++size_of[dense[v]];
  }

  std::vector<NodeId> order(first_seen.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (size_of[a] != size_of[b]) return size_of[a] > size_of[b];
    return a < b;
  });

  std::vector<NodeId> rank(order.size());
  out.sizes.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<NodeId>(i);
    out.sizes[i] = size_of[order[i]];
  }
  out.label.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.label[v] = rank[dense[v]];
  return out;
}

}  // namespace

ComponentLabeling connected_components(const UndirectedGraph& graph) {
  NodeId n = graph.node_count();
  DisjointSet dsu(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : graph.neighbors(u)) {
      if (u < v) dsu.unite(u, v);
    }
  }
  std::vector<NodeId> raw(n);
  for (NodeId v = 0; v < n; ++v) raw[v] = dsu.find(v);
  return finalize(ComponentKind::Connected, std::move(raw));
}

ComponentLabeling strongly_connected_components(const DirectedGraph& graph) {
  // Tarjan with an explicit frame stack. lowlink[v] tracks the smallest
  // visit index reachable through v's DFS subtree plus one back edge.
  NodeId n = graph.node_count();
  constexpr NodeId kUnvisited = static_cast<NodeId>(-1);
  std::vector<NodeId> index(n, kUnvisited);
  std::vector<NodeId> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<NodeId> raw(n, 0);
  NodeId next_index = 0;

  struct Frame {
    NodeId node;
    std::uint32_t edge;  // next out-neighbor offset to explore
  };
  std::vector<Frame> frames;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      NodeId v = frame.node;
      auto out = graph.out_neighbors(v);
      if (frame.edge < out.size()) {
        NodeId w = out[frame.edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        NodeId member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          raw[member] = v;
        } while (member != v);
      }
      frames.pop_back();
      if (!frames.empty()) {
        NodeId parent = frames.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return finalize(ComponentKind::Strong, std::move(raw));
}

ComponentLabeling weakly_connected_components(const DirectedGraph& graph) {
  ComponentLabeling labeling = connected_components(undirected_view(graph));
  labeling.kind = ComponentKind::Weak;
  return labeling;
}

double cross_component_failure_probability(
    const std::vector<std::uint64_t>& sizes) {
  if (sizes.empty()) {
    throw UsageError("cross_component_failure_probability: no components");
  }
  // (N^2 - sum n_i^2) / N^2 in integers first; exact for any graph that fits
  // in memory and avoids the cancellation in 1 - sum of near-zero squares.
  unsigned __int128 total = 0;
  unsigned __int128 sum_squares = 0;
  for (std::uint64_t s : sizes) {
    total += s;
    sum_squares += static_cast<unsigned __int128>(s) * s;
  }
  unsigned __int128 total_squared = total * total;
  return static_cast<double>(
      static_cast<long double>(total_squared - sum_squares) /
      static_cast<long double>(total_squared));
}

double cross_component_failure_probability(const ComponentLabeling& labeling) {
  return cross_component_failure_probability(labeling.sizes);
}

}  // namespace smallworld
