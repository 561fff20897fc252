#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace bggcoh {

// Runs fn(i) for i in [0, n).  Work is dealt round-robin so neighboring
// (often similarly sized) slices spread across workers.  Callers write into
// pre-sized slots indexed by i, which keeps results deterministic no matter
// how many threads run.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += nw) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace bggcoh
