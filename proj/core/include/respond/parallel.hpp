#pragma once

#include <cstddef>
#include <functional>

namespace respond {

/// Thread count from an explicit request, else RESPOND_THREADS, else 1.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, n) on up to `threads` workers with static
/// striding. Callers write results into slot i, so output order never depends
/// on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace respond
