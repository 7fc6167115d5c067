#include "gospace/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gospace {

std::size_t worker_count() {
  if (const char *env = std::getenv("GOSPACE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

long draw_int(std::mt19937_64 &rng, long bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(rng() % span) - bound;
}

}  // namespace gospace
