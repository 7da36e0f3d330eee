#ifndef LINKFORGE_PARALLEL_HPP
#define LINKFORGE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace linkforge {

/// Worker count for the O(n^2) loops: LINKFORGE_THREADS if set, else hardware concurrency.
inline unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LINKFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

namespace detail {
inline thread_local bool in_worker = false;
}

/// Calls fn(i) for every i in [0, n) on up to thread_count() workers. The
/// first exception by index is rethrown after all calls finish. Calls made
/// from inside a worker run serially.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = detail::in_worker ? 1u : static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        detail::in_worker = true;
        for (std::size_t i = next++; i < n; i = next++) run(i);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Sums `block(begin, end)` over fixed-size blocks of [0, n).
///
/// Block boundaries and the order of the final reduction depend only on `n` and
/// `block_size`, so the result is bit-identical for any thread count.
template <typename BlockFn>
double block_sum(std::size_t n, std::size_t block_size, BlockFn&& block) {
  if (n == 0) return 0.0;
  block_size = std::max<std::size_t>(1, block_size);
  const std::size_t n_blocks = (n + block_size - 1) / block_size;
  std::vector<double> partial(n_blocks, 0.0);
  parallel_for(n_blocks, [&](std::size_t b) {
    const std::size_t lo = b * block_size;
    partial[b] = block(lo, std::min(n, lo + block_size));
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace linkforge

#endif  // LINKFORGE_PARALLEL_HPP
