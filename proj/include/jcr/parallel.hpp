#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace jcr {

/// Splits [0, count) into `workers` contiguous chunks and runs
/// fn(worker, begin, end) on each, one thread per chunk. Chunk boundaries
/// depend only on (count, workers); callers write results by index so the
/// merged output is independent of scheduling. The first exception thrown
/// by any worker is rethrown after all threads join.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::jthread> threads;
  const std::uint64_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = std::min(count, w * step), end = std::min(count, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  threads.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace jcr
