#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace mdir {

// Worker cap: min(hardware threads, MDIR_THREADS when set).
inline unsigned max_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MDIR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

// Static block partition of [0, n) into at most max_threads() chunks, none
// smaller than `grain` (except the last).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> plan_chunks(std::uint64_t n,
                                                                        std::uint64_t grain) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  if (n == 0) return ranges;
  grain = std::max<std::uint64_t>(grain, 1);
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(max_threads(), n / grain));
  const std::uint64_t step = (n + workers - 1) / workers;
  for (std::uint64_t lo = 0; lo < n; lo += step) ranges.emplace_back(lo, std::min(lo + step, n));
  return ranges;
}

// Runs body(chunk_index, lo, hi) over the plan, one thread per chunk. Chunks
// own disjoint ranges, so exact-arithmetic results are independent of the
// thread count.
inline void run_chunks(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& plan,
                       const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  if (plan.empty()) return;
  if (plan.size() == 1) {
    body(0, plan[0].first, plan[0].second);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(plan.size());
  for (unsigned c = 0; c < plan.size(); ++c)
    pool.emplace_back([&body, &plan, c] { body(c, plan[c].first, plan[c].second); });
  for (auto& t : pool) t.join();
}

inline void parallel_for_chunks(
    std::uint64_t n, std::uint64_t grain,
    const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  run_chunks(plan_chunks(n, grain),
             [&body](unsigned, std::uint64_t lo, std::uint64_t hi) { body(lo, hi); });
}

}  // namespace mdir
