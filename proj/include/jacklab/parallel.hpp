#pragma once

#include <cstddef>
#include <functional>

namespace jacklab {

// Worker count: JACKLAB_THREADS if set to a positive integer, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) across thread_count() workers. Exceptions are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace jacklab
