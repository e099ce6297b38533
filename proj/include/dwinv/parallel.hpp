/**
 * Minimal fork-join helper. Work is split into contiguous index ranges, so
 * any computation that writes only to its own indices is deterministic
 * regardless of the worker count.
 */
#ifndef DWINV_PARALLEL_HPP
#define DWINV_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace dwinv {

/// Sets the process-wide worker count used by parallel_for (minimum 1).
void set_thread_count(unsigned n);
unsigned thread_count();

/**
 * Calls body(begin, end) over a partition of [0, n). Runs inline when a
 * single worker is configured or n is below `grain`. Exceptions thrown by
 * a worker are rethrown on the calling thread.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t grain = 4096);

}   // namespace dwinv

#endif
