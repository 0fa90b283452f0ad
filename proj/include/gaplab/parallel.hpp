#pragma once

#include <cstddef>
#include <functional>

namespace gaplab {

// Worker count: GAPLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n) over contiguous chunks. Each index is handled by
// exactly one worker, so writes to slot i of a pre-sized buffer are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gaplab
