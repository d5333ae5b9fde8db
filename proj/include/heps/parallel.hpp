#pragma once

#include <cstddef>
#include <functional>

namespace heps {

/// Worker cap from HEPS_THREADS: 0 or 1 means sequential; unset means hardware concurrency.
std::size_t worker_count();

/// Calls body(k) for k in [0, n), splitting the range into contiguous chunks
/// across worker_count() threads. Callers write results by index, so output
/// does not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace heps
