#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace incidence::detail {

/// Splits [0, n) into `threads` contiguous chunks and calls
/// body(chunk_index, begin, end) for each. Chunk boundaries depend only on
/// (n, threads), so per-chunk results merged in chunk order are
/// deterministic.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, n);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
  for (auto& w : workers) w.join();
}

inline std::size_t chunk_count(std::size_t n, unsigned threads) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) return 1;
  return std::min<std::size_t>(threads, n);
}

}  // namespace incidence::detail
