#pragma once

// Minimal deterministic work partitioning.  Chunks are fixed functions
// of the item count and the worker cap, and every reduction in this
// library is order-independent (max, disjoint writes), so results do
// not depend on scheduling.

#include <cstddef>
#include <functional>

namespace covercraft {

// 0 means "use hardware concurrency".  The CLI --threads flag sets this.
void set_worker_limit(unsigned workers);
unsigned worker_limit();

// Runs fn(begin, end) over a partition of [0, count) on up to
// worker_limit() threads; falls back to a direct call for small counts.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace covercraft
