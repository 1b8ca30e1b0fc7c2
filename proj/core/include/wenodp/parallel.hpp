#ifndef WENODP_PARALLEL_HPP_
#define WENODP_PARALLEL_HPP_

#include <functional>

namespace wenodp {

/// Runs fn(begin, end) over a fixed contiguous partition of [0, n) across up
/// to `workers` threads. The partition depends only on (n, workers), and
/// callers write to disjoint ranges, so results do not depend on scheduling.
void parallel_for(int n, int workers, const std::function<void(int, int)>& fn);

}  // namespace wenodp

#endif  // WENODP_PARALLEL_HPP_
