// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace pj {

/// Worker cap: PJ_WORKERS when set to a positive integer, otherwise the
/// hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) across up to `workers` threads (contiguous
/// index blocks). Nested calls run serially, and callers must make fn(i)
/// write only to slot i so results never depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers = 0);

}  // namespace pj
