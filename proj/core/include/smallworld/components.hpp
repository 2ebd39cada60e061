#pragma once

#include <cstdint>
#include <vector>

#include "smallworld/graph.hpp"

namespace smallworld {

enum class ComponentKind { Connected, Weak, Strong };

// A partition of the nodes into components. Labels are dense and ordered by
// component size descending (ties by first node appearance), so label 0 is
// always a largest component and sizes[label[v]] is v's component size.
struct ComponentLabeling {
  ComponentKind kind = ComponentKind::Connected;
  std::vector<NodeId> label;        // per node, in 0..count-1
  std::vector<std::uint64_t> sizes; // descending

  std::size_t count() const { return sizes.size(); }
  std::uint64_t largest() const { return sizes.empty() ? 0 : sizes.front(); }
};

// Union-find components of an undirected graph.
ComponentLabeling connected_components(const UndirectedGraph& graph);

// Maximal sets with mutual directed reachability, via an iterative
// linear-time DFS (recursion would overflow the stack at graph scale).
ComponentLabeling strongly_connected_components(const DirectedGraph& graph);

// Components of the edge-direction-ignored view.
ComponentLabeling weakly_connected_components(const DirectedGraph& graph);

// Probability that two independent uniform node draws land in different
// components: 1 - sum((n_i/N)^2). Empty sizes -> UsageError.
double cross_component_failure_probability(const ComponentLabeling& labeling);
double cross_component_failure_probability(
    const std::vector<std::uint64_t>& sizes);

}  // namespace smallworld
