#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace geodex {

// Worker count: GEODEX_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Calls f(i) for i in [0, n) on up to thread_count() workers, contiguous blocks.
// Results must be written by index; the first exception by block order is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace geodex
