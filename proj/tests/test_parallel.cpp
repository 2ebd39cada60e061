#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "smallworld/parallel.hpp"

namespace sw = smallworld;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv("SMALLWORLD_THREADS", value, 1);
    } else {
      unsetenv("SMALLWORLD_THREADS");
    }
  }
  ~EnvGuard() { unsetenv("SMALLWORLD_THREADS"); }
};

}  // namespace

TEST_CASE("explicit thread request wins over everything") {
  EnvGuard env("3");
  CHECK(sw::resolve_threads(5) == 5);
  CHECK(sw::resolve_threads(1) == 1);
}

TEST_CASE("environment override applies when nothing is requested") {
  {
    EnvGuard env("3");
    CHECK(sw::resolve_threads() == 3);
    CHECK(sw::resolve_threads(0) == 3);
  }
  // Garbage, non-positive, or trailing-junk values fall through to the
  // hardware default, which is always at least 1.
  for (const char* bad : {"zero", "-2", "0", "3x", ""}) {
    EnvGuard env(bad);
    CHECK(sw::resolve_threads() >= 1);
    CHECK(sw::resolve_threads() != 0);
  }
  EnvGuard off(nullptr);
  CHECK(sw::resolve_threads() >= 1);
}

TEST_CASE("blocks cover every index exactly once") {
  for (std::size_t count : {0ul, 1ul, 2ul, 7ul, 100ul, 101ul}) {
    for (unsigned threads : {1u, 2u, 3u, 8u, 200u}) {
      std::vector<std::atomic<int>> hits(count);
      for (auto& h : hits) h = 0;
      sw::parallel_for_blocks(count, threads,
                              [&](unsigned, std::size_t begin, std::size_t end) {
                                for (std::size_t i = begin; i < end; ++i) {
                                  ++hits[i];
                                }
                              });
      for (std::size_t i = 0; i < count; ++i) CHECK(hits[i] == 1);
    }
  }
}

TEST_CASE("block ids are dense and ranges ordered") {
  std::mutex m;
  std::vector<std::array<std::size_t, 3>> seen;
  sw::parallel_for_blocks(23, 4, [&](unsigned block, std::size_t begin,
                                     std::size_t end) {
    std::lock_guard<std::mutex> lock(m);
    seen.push_back({block, begin, end});
  });
  REQUIRE(seen.size() == 4);
  std::sort(seen.begin(), seen.end());
  std::size_t expect_begin = 0;
  for (std::size_t b = 0; b < seen.size(); ++b) {
    CHECK(seen[b][0] == b);
    CHECK(seen[b][1] == expect_begin);
    CHECK(seen[b][2] > seen[b][1]);
    expect_begin = seen[b][2];
  }
  CHECK(expect_begin == 23);

  // More workers than items degrades to one item per block, never an empty
  // block.
  std::atomic<int> calls{0};
  sw::parallel_for_blocks(3, 50, [&](unsigned, std::size_t begin,
                                     std::size_t end) {
    CHECK(end == begin + 1);
    ++calls;
  });
  CHECK(calls == 3);
}
