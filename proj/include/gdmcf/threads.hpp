#pragma once

#include <functional>

namespace gdmcf {

// Worker count taken from GDMCF_THREADS (default 1, clamped to [1, 64]).
int thread_budget();

// Runs fn(begin, end) over a row range split across the thread budget.
// Each chunk owns a disjoint output row range, so results are bitwise
// deterministic regardless of the worker count.
void parallel_rows(int n, const std::function<void(int, int)>& fn);

}  // namespace gdmcf
