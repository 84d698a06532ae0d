#pragma once

#include <cstddef>
#include <functional>

namespace hermanlab {

// Thread budget: HERMANLAB_THREADS env var, else hardware concurrency.
// set_thread_budget(0) restores the default.
std::size_t thread_budget();
void set_thread_budget(std::size_t n);

// Splits [0, n) into contiguous chunks, one worker thread per chunk.
// Workers must write to disjoint state; results are deterministic because
// the partition depends only on n and the budget is irrelevant to output.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hermanlab
