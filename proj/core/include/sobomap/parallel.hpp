#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sobomap {

// Worker count: SOBOMAP_THREADS caps it, 0/unset means hardware concurrency.
inline int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SOBOMAP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < long(hw)) return int(v);
        if (v >= long(hw)) return int(v);
    }
    return int(hw);
}

// Runs fn(block) for block in [0, nblocks). Blocks are claimed atomically, so
// the schedule varies with worker count but each block's work is a pure
// function of its index; callers combine per-block results in index order.
inline void parallel_blocks(int nblocks, const std::function<void(int)>& fn) {
    int nw = std::min(worker_count(), nblocks);
    if (nw <= 1) {
        for (int b = 0; b < nblocks; ++b) fn(b);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int b = next.fetch_add(1);
                if (b >= nblocks) break;
                fn(b);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace sobomap
