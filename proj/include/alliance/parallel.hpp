#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace alliance {

/// Worker count used when the caller asks for 0 jobs.
inline std::size_t default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

/// out[i] = fn(i) for i in [0, count), on up to `jobs` threads. Results land by index, so
/// the output does not depend on scheduling. The first exception thrown is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) {
  std::vector<Result> out(count);
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min(jobs, std::max<std::size_t>(count, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace alliance
