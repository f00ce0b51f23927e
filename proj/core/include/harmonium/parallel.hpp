#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace harmonium {

/// Runs fn(0) .. fn(tasks-1) on up to `workers` threads and returns the
/// results in task order. The first exception (by task index) is rethrown
/// after every worker has joined.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t tasks, unsigned workers, Fn&& fn) {
  std::vector<Result> results(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  auto run = [&](std::size_t i) {
    try {
      results[i] = fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const std::size_t threads = std::min<std::size_t>(std::max(workers, 1U), tasks);
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks; i = next++) run(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace harmonium
