#ifndef PGMD_PARALLEL_HPP
#define PGMD_PARALLEL_HPP

#include <functional>

namespace pgmd {

// Effective worker count: `requested` if positive, otherwise the PGMD_THREADS
// environment variable, otherwise a hardware-based default. Always >= 1.
int worker_count(int requested = 0);

// Runs fn(i) for i in [begin, end), split into contiguous chunks across
// workers. Callers must only write to disjoint state per index; results are
// then identical for any worker count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn,
                  int threads = 0);

}  // namespace pgmd

#endif  // PGMD_PARALLEL_HPP
