#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "ccheb/mpnum.hpp"

namespace ccheb {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Each worker
/// inherits the caller's working precision. body must not throw.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const NumericContext ctx(working_digits());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      NumericContext::Scope scope(ctx);
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ccheb
