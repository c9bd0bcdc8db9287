#pragma once

// Deterministic chunked parallelism. Work over [0, n) is split into
// fixed-size chunks whose boundaries do not depend on the worker count, and
// per-chunk results are merged in chunk order, so any --jobs value produces
// identical output. Sampled checks derive one RNG stream per chunk.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace cliffgeom {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// chunk_fn(begin, end, chunk_index) -> Result; merge(acc, result) folds in
/// chunk order. Result must be default-constructible and movable.
template <typename Result, typename ChunkFn, typename MergeFn>
Result chunked_reduce(std::uint64_t n, std::uint64_t chunk_size, unsigned jobs, ChunkFn chunk_fn,
                      MergeFn merge) {
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t chunks = (n + chunk_size - 1) / chunk_size;
  Result acc{};
  if (jobs <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t b = c * chunk_size;
      merge(acc, chunk_fn(b, std::min(n, b + chunk_size), c));
    }
    return acc;
  }

  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t b = c * chunk_size;
      results[c] = chunk_fn(b, std::min(n, b + chunk_size), c);
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::min<std::uint64_t>(jobs, chunks);
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& r : results) merge(acc, std::move(r));
  return acc;
}

}  // namespace cliffgeom
