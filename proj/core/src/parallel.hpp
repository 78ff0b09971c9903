#ifndef GWLINE_SRC_PARALLEL_HPP
#define GWLINE_SRC_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace gwline::detail {

inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

// Runs body(chunk_index, begin, end) on contiguous index ranges, one per
// worker. Chunk boundaries depend only on (count, workers), so callers can
// merge per-chunk results in chunk order and stay deterministic.
template <typename Body>
void run_chunked(std::uint64_t count, unsigned workers, Body&& body) {
  if (count == 0) return;
  if (workers <= 1 || count < 2) {
    body(0u, std::uint64_t{0}, count);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  const std::uint64_t base = count / workers;
  const std::uint64_t extra = count % workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::uint64_t begin = 0;
  for (unsigned c = 0; c < workers; ++c) {
    const std::uint64_t len = base + (c < extra ? 1 : 0);
    const std::uint64_t end = begin + len;
    threads.emplace_back([&body, c, begin, end] { body(c, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

} // namespace gwline::detail

#endif
