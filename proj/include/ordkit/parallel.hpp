#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ordkit {

/// Worker count used by every parallel scan in the library. Results never
/// depend on it.
unsigned worker_threads() noexcept;
void set_worker_threads(unsigned n) noexcept;

/// RAII override of the worker count.
class ScopedWorkerThreads {
 public:
  explicit ScopedWorkerThreads(unsigned n) : saved_(worker_threads()) { set_worker_threads(n); }
  ~ScopedWorkerThreads() { set_worker_threads(saved_); }
  ScopedWorkerThreads(const ScopedWorkerThreads&) = delete;
  ScopedWorkerThreads& operator=(const ScopedWorkerThreads&) = delete;

 private:
  unsigned saved_;
};

namespace detail {

/// Runs body(chunk) for chunk in [0, chunks) on the worker pool. Chunks are
/// claimed in increasing order; `skip(chunk)` lets callers abandon chunks
/// that can no longer matter. The first exception is rethrown.
void run_chunks(std::uint64_t chunks, const std::function<void(std::uint64_t)>& body,
                const std::function<bool(std::uint64_t)>& skip = {});

}  // namespace detail

/// Least index in [0, count) satisfying pred, or nullopt. Parallel scans
/// reduce by minimum, so the answer equals the sequential one.
template <class Pred>
std::optional<std::uint64_t> find_first_index(std::uint64_t count, Pred pred, std::uint64_t chunk = 256) {
  if (count == 0) return std::nullopt;
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::atomic<std::uint64_t> best{count};
  detail::run_chunks(
      chunks,
      [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(count, begin + chunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          if (i >= best.load(std::memory_order_relaxed)) return;
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      },
      [&](std::uint64_t c) { return c * chunk >= best.load(std::memory_order_relaxed); });
  const auto b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

/// Maps fixed-size chunks of [0, count) to per-chunk results, returned in
/// chunk order. Chunk boundaries depend only on `chunk`, never on the
/// worker count.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t count, std::uint64_t chunk, Fn fn) {
  const std::uint64_t chunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  detail::run_chunks(chunks, [&](std::uint64_t c) {
    const std::uint64_t begin = c * chunk;
    results[c] = fn(c, begin, std::min(count, begin + chunk));
  });
  return results;
}

}  // namespace ordkit
