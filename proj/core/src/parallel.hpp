#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace penergy::detail {

// Runs work(i) for every i in [0, count) on up to `workers` threads. Callers
// write results into per-index slots, so the outcome is independent of the
// schedule.
template <typename Work>
void parallel_for(std::size_t count, unsigned workers, Work&& work) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const auto used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (unsigned t = 0; t < used; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace penergy::detail
