#pragma once

#include <cstdint>

#include "smallworld/graph.hpp"

namespace smallworld {

struct ErParams {
  NodeId n = 0;
  double p = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
};

struct ErBaseline {
  ErParams params;
  UndirectedGraph graph;
  double baseline_clustering = 0.0;
};

// G(n,p): each of the C(n,2) unordered pairs present independently with
// probability p, bit-for-bit deterministic given the seed. Runs in
// O(n + generated edges) by jumping a geometric number of pairs between
// successes; a per-pair coin flip would be ~2e11 trials at the scale this
// library targets. Invalid p -> UsageError.
UndirectedGraph er_generate(const ErParams& params);

// The random baseline matched to a measured graph: p = 2M/(N(N-1)), the
// density that preserves the expected edge count. Returns the generated
// instance and its average clustering for side-by-side comparison.
// N < 2 -> UsageError.
ErBaseline matched_er_baseline(const UndirectedGraph& graph,
                               std::uint64_t seed, unsigned threads = 0);

}  // namespace smallworld
