#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zeta_arr {

// Splits [0, total) into at most `threads` contiguous chunks and runs
// fn(begin, end, chunk) on each. The first exception thrown by any worker is
// rethrown after all workers joined.
template <class Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads < 1 ? 1 : threads, total));
  if (workers == 1) {
    fn(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t k = 0; k < workers; ++k) {
      const std::uint64_t begin = total * k / workers;
      const std::uint64_t end = total * (k + 1) / workers;
      pool.emplace_back([&, begin, end, k] {
        try {
          fn(begin, end, static_cast<std::size_t>(k));
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace zeta_arr
