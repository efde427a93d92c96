#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace addcomp::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(block) for block in [0, blocks). Blocks are claimed dynamically but
// each writes only its own output range, so results do not depend on the
// schedule.
template <typename Fn>
void for_each_block(std::uint64_t blocks, unsigned threads, Fn&& fn) {
  threads = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(blocks, 1));
  if (threads <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next++; b < blocks; b = next++) fn(b);
    });
  }
}

}  // namespace addcomp::detail
