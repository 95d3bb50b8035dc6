// SPDX-License-Identifier: Apache-2.0
#include "pinion/workers.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pinion {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PINION_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace detail {

void parallel_blocks(int count, int workers, const std::function<void(int, int)>& fn) {
    workers = std::clamp(workers, 1, std::max(count, 1));
    if (workers == 1 || count <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int k = 0; k < workers; ++k) {
        const int begin = static_cast<int>(static_cast<long>(count) * k / workers);
        const int end = static_cast<int>(static_cast<long>(count) * (k + 1) / workers);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace detail

} // namespace pinion
