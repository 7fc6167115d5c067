#ifndef GOSPACE_PARALLEL_HPP
#define GOSPACE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace gospace {

/// Worker cap: GOSPACE_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs fn(index, worker) for index in [0, n) over a static stripe of
/// workers. Callers write results by index, so output never depends on the
/// schedule. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, Fn &&fn) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, std::size_t{0});
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Independent generator for sample `index` of stream `stream` under `seed`.
/// Seeded through std::seed_seq, whose mixing is fixed by the standard.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform-ish integer in [-bound, bound] from raw generator output; the
/// mapping is spelled out so results are identical across standard libraries.
long draw_int(std::mt19937_64 &rng, long bound);

}  // namespace gospace

#endif
