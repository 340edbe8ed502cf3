#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "areakin/estimate.hpp"
#include "areakin/random.hpp"

namespace areakin {

/// Worker pool settings for Monte Carlo loops.
struct ParallelOptions {
  int workers = 0;                    // 0: hardware concurrency
  std::uint64_t chunk_size = 2048;    // samples per RNG substream
};

/// Runs `samples` draws split into fixed chunks. Chunk c draws from the
/// substream derive_seed(seed, stream, c) and its statistics are merged in
/// chunk order, so the result does not depend on the worker count.
///
/// body(Rng&, std::uint64_t count, StatsVector& stats) must add `count`
/// observations to each entry of `stats`.
template <class Body>
StatsVector run_chunked(std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                        std::size_t n_stats, const ParallelOptions& opt, Body&& body) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk_size);
  const std::uint64_t n_chunks = (samples + chunk - 1) / chunk;
  std::vector<StatsVector> parts(n_chunks, StatsVector(n_stats));

  auto run_one = [&](std::uint64_t c) {
    Rng rng(derive_seed(seed, stream, c));
    const std::uint64_t begin = c * chunk;
    const std::uint64_t count = std::min(chunk, samples - begin);
    body(rng, count, parts[c]);
  };

  int workers = opt.workers > 0 ? opt.workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(n_chunks)));

  if (workers == 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run_one(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t c = next.fetch_add(1);
          if (c >= n_chunks) return;
          try {
            run_one(c);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(n_chunks);
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  StatsVector total(n_stats);
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

}  // namespace areakin
