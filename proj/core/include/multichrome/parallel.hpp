#pragma once

#include <cstddef>
#include <functional>

namespace multichrome {

/// Number of hardware threads, at least 1.
unsigned default_thread_count() noexcept;

/// Calls body(i) for every i in [0, count) using up to `threads` workers
/// (0 means default_thread_count()). Callers make results schedule-independent
/// by writing only to slot i. The first exception thrown by any body is
/// rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace multichrome
