#pragma once

#include <cstddef>
#include <functional>

namespace smallworld {

// Resolves the worker count: an explicit request wins, then the
// SMALLWORLD_THREADS environment variable, then hardware concurrency.
// Always returns at least 1.
unsigned resolve_threads(unsigned requested = 0);

// Runs body(block_index, begin, end) over [0, count) split into contiguous
// blocks, one per worker. Callers that need results independent of the
// worker count should have each block write per-index slots (or exact
// integer accumulators) and reduce sequentially afterwards.
void parallel_for_blocks(
    std::size_t count, unsigned threads,
    const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace smallworld
