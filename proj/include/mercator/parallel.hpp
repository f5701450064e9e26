#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mercator {

/// Runs body(begin, end) over [0, n) split into contiguous chunks, one per
/// worker. Chunks are disjoint, so results written by index never depend on
/// the worker count.
template <typename Body>
void parallel_chunks(std::size_t n, int workers, Body body) {
  const std::size_t count = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                                                    std::max<std::size_t>(n, 1));
  if (count == 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t step = (n + count - 1) / count;
  std::vector<std::jthread> threads;
  for (std::size_t begin = 0; begin < n; begin += step) {
    threads.emplace_back([=] { body(begin, std::min(n, begin + step)); });
  }
}

}  // namespace mercator
