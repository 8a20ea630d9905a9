#pragma once

#include <cstdint>
#include <functional>

namespace nilgraph {

// NILGRAPH_WORKERS overrides any requested count; falls back to the
// hardware concurrency when neither is set.
int resolve_worker_count(int requested);

// Runs body(0..count-1) across workers. Iterations must be independent;
// the first exception thrown by any iteration is rethrown on the caller.
void parallel_for_index(std::int64_t count, int workers,
                        const std::function<void(std::int64_t)>& body);

}  // namespace nilgraph
