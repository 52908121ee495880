#pragma once

#include <cstdint>
#include <functional>

namespace grasscub {

/// Worker count: --threads flag > GRASSCUB_THREADS env > hardware concurrency.
int default_threads();

/// Process-wide override used by the CLI's --threads flag (0 = auto).
void set_thread_override(int threads);

/// Runs fn(chunk_index, begin, end) over a fixed partition of [0, n) into
/// n_chunks pieces. The partition does not depend on the worker count, so a
/// caller that reduces per-chunk results in chunk order gets identical output
/// for any --threads value.
void parallel_chunks(std::int64_t n, int n_chunks,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn,
                     int threads = 0);

}  // namespace grasscub
