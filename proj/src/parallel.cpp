// SPDX-License-Identifier: Apache-2.0
#include "phasejumps/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace pj {

namespace {
thread_local bool g_in_parallel = false;
}

int worker_count() {
    if (const char* env = std::getenv("PJ_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers) {
    if (workers <= 0) workers = worker_count();
    if (n == 0) return;
    if (g_in_parallel || workers == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = n * t / nthreads;
        const std::size_t hi = n * (t + 1) / nthreads;
        pool.emplace_back([lo, hi, &fn] {
            g_in_parallel = true;
            for (std::size_t i = lo; i < hi; ++i) fn(i);
            g_in_parallel = false;
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace pj
