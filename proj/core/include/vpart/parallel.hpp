#pragma once

#include <cstddef>
#include <functional>

namespace vpart {

// VPART_THREADS if set to a positive integer, else the hardware concurrency.
unsigned thread_count();

// Runs f(0..n-1) on up to `threads` workers; rethrows the first exception.
void parallel_for(size_t n, const std::function<void(size_t)>& f, unsigned threads = 0);

}  // namespace vpart
