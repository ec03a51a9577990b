#ifndef QBAKER_SRC_PARALLEL_HPP
#define QBAKER_SRC_PARALLEL_HPP

#include <functional>

namespace qbaker::detail {

// Runs fn(i) for i in [0, n). Thread count follows the hardware but is capped
// by the QBAKER_THREADS environment variable when set. Iterations must be
// independent; results are deterministic because each i owns its output slot.
void parallel_for(int n, const std::function<void(int)>& fn);

int thread_budget();

}  // namespace qbaker::detail

#endif
