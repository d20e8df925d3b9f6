#pragma once

#include <cstddef>
#include <functional>

namespace regdp {

// Worker count: REGDP_THREADS when set (clamped to >= 1), otherwise
// hardware concurrency.
int thread_count();

// Splits [0, n) into contiguous chunks, one per worker, and runs fn(begin,
// end) on each. fn must only touch disjoint output per index, which keeps
// results identical for every thread count. Runs inline for small n.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace regdp
