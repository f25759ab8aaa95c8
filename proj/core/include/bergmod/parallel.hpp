#pragma once

#include <cstddef>
#include <functional>

namespace bergmod {

// Worker count: hardware concurrency, capped by BERGMOD_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, count). Each index is executed exactly once and
// results must be written to per-index slots, so output never depends on the
// number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bergmod
