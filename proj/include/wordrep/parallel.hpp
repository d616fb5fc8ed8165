#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wordrep::detail {

/// Runs task(0..tasks-1) on up to `workers` threads (the caller included).
/// Tasks are handed out in index order.
template <class Task>
void run_pool(std::size_t tasks, std::size_t workers, Task&& task) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) task(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, tasks); ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

}  // namespace wordrep::detail
