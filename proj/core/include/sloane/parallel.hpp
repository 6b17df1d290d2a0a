#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sloane {

/// 0 means "one worker per hardware thread".
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls fn(i) for every i in [begin, end). Work is handed out in blocks
/// from a shared counter; callers write results into slots indexed by i, so
/// the merged output does not depend on scheduling. The first exception
/// thrown by any worker is rethrown here.
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn,
                  std::uint64_t block = 256) {
  if (begin >= end) return;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), (end - begin + block - 1) / block));
  if (workers <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }

  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t lo = next.fetch_add(block);
        if (lo >= end) return;
        const std::uint64_t hi = std::min(end, lo + block);
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(end);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sloane
