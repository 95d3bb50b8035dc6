// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace pinion {

/// Worker-count resolution: an explicit request > 0 wins, otherwise the
/// PINION_WORKERS environment variable, otherwise the hardware concurrency.
int resolve_workers(int requested);

namespace detail {

/// Run fn(begin, end) over a static block partition of [0, count) with one
/// thread per block. Blocks are disjoint, so writers may share an output
/// array without synchronization.
void parallel_blocks(int count, int workers, const std::function<void(int, int)>& fn);

} // namespace detail

} // namespace pinion
