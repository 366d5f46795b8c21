#ifndef POLYLOG_PARALLEL_HPP
#define POLYLOG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace polylog {

// Thread budget: min(hardware_concurrency, POLYLOG_THREADS) with a floor of 1.
std::size_t thread_budget();

// Runs fn(i) for i in [0, n).  Work is split across the thread budget; results
// must be written to preallocated slots so reductions stay order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace polylog

#endif
