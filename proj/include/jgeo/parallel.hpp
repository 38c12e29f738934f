#pragma once

// Small fork-join helper for the batch samplers and verify suites. Work
// items are indexed, every item writes only its own slot, and the caller
// sees results in index order, so the output does not depend on scheduling.
// JGEO_THREADS caps the pool; unset means hardware concurrency.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jgeo {

inline std::size_t worker_count(std::size_t jobs) {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("JGEO_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1 &&
        static_cast<std::size_t>(cap) < hw)
      hw = static_cast<std::size_t>(cap);
  }
  return std::min(hw, jobs > 0 ? jobs : std::size_t{1});
}

// out[i] = fn(i) for i in [0, jobs). The first exception thrown by any item
// is rethrown after the pool drains.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t jobs, Fn&& fn) {
  std::vector<T> out(jobs);
  const std::size_t workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) out[i] = fn(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace jgeo
