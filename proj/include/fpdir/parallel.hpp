#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fpdir {

// Splits [begin, end) into `workers` contiguous blocks and runs
// body(worker, lo, hi) for each block. The partition only depends on the
// range and the worker count, and callers reduce per-worker results in
// worker order, so the output never depends on scheduling.
template <class Body>
void parallel_blocks(std::uint64_t begin, std::uint64_t end, unsigned workers, Body&& body) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, total));
  if (workers == 1) {
    body(0u, begin, end);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = begin + total * w / workers;
      const std::uint64_t hi = begin + total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          body(w, lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace fpdir
