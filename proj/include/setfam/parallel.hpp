#pragma once

namespace setfam {

// Worker count from SETFAM_THREADS, falling back to the hardware count;
// always at least 1.  Parallel paths must give schedule-independent
// results, so this only ever affects wall time.
unsigned configured_threads();

}  // namespace setfam
