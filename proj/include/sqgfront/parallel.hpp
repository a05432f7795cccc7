#pragma once

#include <atomic>
#include <functional>

namespace sqgfront {

/// Global worker-thread count for node-parallel loops. 0 = hardware
/// concurrency. Results are bit-identical for any value: threads only
/// partition independent output slots, reductions stay sequential.
void set_thread_count(int threads);
int thread_count();

/// Runs fn(i) for i in [0, count) partitioned statically across threads.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace sqgfront
