#pragma once

#include <cstddef>
#include <functional>

namespace greenbox::util {

// Worker count from GREENBOX_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) on thread_count() workers. Each index is
// handled exactly once; callers write results into per-index slots so the
// outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace greenbox::util
