#pragma once

#include <cstddef>
#include <functional>

namespace shockscope {

// Worker count: SHOCKSCOPE_THREADS if set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int worker_count();

// Runs body(i) for i in [0, n). Each index is handled by exactly one worker,
// so results written per index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace shockscope
