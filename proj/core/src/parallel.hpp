#pragma once

// Minimal fork-join helper over std::thread.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cgw::detail {

inline std::size_t effective_threads(std::size_t requested, std::size_t work) {
  std::size_t t = requested == 0 ? std::max<std::size_t>(
                                       1, std::thread::hardware_concurrency())
                                 : requested;
  return std::max<std::size_t>(1, std::min(t, std::max<std::size_t>(work, 1)));
}

// Calls fn(worker) for worker in [0, threads); rethrows the first exception.
template <typename Fn>
void run_workers(std::size_t threads, Fn&& fn) {
  if (threads <= 1) {
    fn(std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

// Half-open chunk [begin, end) of n items for worker w of t.
inline std::pair<std::size_t, std::size_t> chunk(std::size_t n, std::size_t w,
                                                 std::size_t t) {
  return {n * w / t, n * (w + 1) / t};
}

}  // namespace cgw::detail
