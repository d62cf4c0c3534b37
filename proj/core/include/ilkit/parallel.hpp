#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace ilkit {

// Worker threads used by exhaustive scans: ILKIT_THREADS when set to a
// positive integer, otherwise the hardware concurrency.
int worker_count();

// Least index in [0, count) satisfying pred, if any. The result does not
// depend on the thread count: workers scan strided ascending ranges and
// abandon indices that can no longer beat the best hit found so far.
// pred must be safe to call concurrently.
std::optional<std::int64_t> least_index_where(
    std::int64_t count, const std::function<bool(std::int64_t)>& pred);

}  // namespace ilkit
