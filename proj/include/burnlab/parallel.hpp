#pragma once

#include <cstddef>
#include <functional>

namespace burnlab {

/// Worker count: BURNLAB_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls fn(i) for i in [0, count) on up to `workers` threads. Indices are
/// claimed dynamically; fn must only write state owned by its index. The
/// first exception thrown by any call is rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t workers = worker_count());

}  // namespace burnlab
