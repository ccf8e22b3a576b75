#pragma once

#include <cstddef>
#include <functional>

namespace corank::util {

/// Worker count: CORANK_SS_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t thread_count();

/// Runs fn(i) for i in [0, n). Indices are handed out one at a time; the exception from the lowest
/// failing index is rethrown after all workers finish. Callers write results into per-index slots,
/// so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace corank::util
