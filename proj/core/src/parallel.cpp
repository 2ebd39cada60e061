#include "smallworld/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace smallworld {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SMALLWORLD_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<unsigned>(value);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for_blocks(
    std::size_t count, unsigned threads,
    const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  unsigned workers = std::max(1u, threads);
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  if (workers == 1) {
    body(0, 0, count);
    return;
  }
  std::size_t chunk = count / workers;
  std::size_t remainder = count % workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t size = chunk + (w < remainder ? 1 : 0);
    std::size_t end = begin + size;
    pool.emplace_back(body, w, begin, end);
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace smallworld
