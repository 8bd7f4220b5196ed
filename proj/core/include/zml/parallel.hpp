#pragma once
// Deterministic work distribution.  Callers split work into independently
// computed chunks with fixed boundaries and combine results in chunk order,
// so the outcome is bit-identical for any worker count.  ZML_THREADS caps
// the number of workers.

#include <cstddef>
#include <functional>

namespace zml {

// Number of workers: min(hardware_concurrency, ZML_THREADS if set), >= 1.
std::size_t worker_count();

// Runs fn(chunk_index) for chunk_index in [0, n_chunks), possibly on
// multiple threads.  fn must only write to chunk-local state.
void parallel_for_chunks(std::size_t n_chunks,
                         const std::function<void(std::size_t)>& fn);

}  // namespace zml
