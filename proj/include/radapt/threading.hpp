#pragma once

#include <functional>

namespace radapt {

/// Worker count from RADAPT_THREADS (default 1), clamped to hardware.
int thread_count();

/// Runs fn(i) for i in [0, n). With more than one worker the range is
/// chunked across std::threads; callers must write only to per-index slots
/// so results are identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace radapt
