#pragma once

#include <cstddef>
#include <functional>

namespace adelic {

// Worker count: hardware concurrency, capped by ADELIC_ZETA_THREADS.
unsigned worker_count();

// Calls fn(i) for every i < n, splitting the range into contiguous blocks
// over worker_count() threads. Each index is handled exactly once, so writes
// to per-index slots give results independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace adelic
