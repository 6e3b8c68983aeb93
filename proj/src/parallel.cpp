#include "ordkit/parallel.hpp"

namespace ordkit {

namespace {
std::atomic<unsigned> g_workers{1};
}

unsigned worker_threads() noexcept { return g_workers.load(); }
void set_worker_threads(unsigned n) noexcept { g_workers.store(n == 0 ? 1 : n); }

namespace detail {

void run_chunks(std::uint64_t chunks, const std::function<void(std::uint64_t)>& body,
                const std::function<bool(std::uint64_t)>& skip) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_threads(), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      if (skip && skip(c)) break;
      body(c);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const auto c = next.fetch_add(1);
      if (c >= chunks) return;
      if (skip && skip(c)) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail
}  // namespace ordkit
