#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace minq {

inline unsigned hardware_parallelism() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

/// Runs fn(i) for i in [0,n) on up to `threads` workers pulling chunks of
/// `chunk` indices from a shared counter. Each index writes only its own
/// output slot, so results do not depend on the schedule.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn,
                         std::size_t chunk = 1) {
    if (chunk < 1) chunk = 1;
    if (threads <= 1 || n <= chunk) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(threads);
    std::size_t tasks = (n + chunk - 1) / chunk;
    if (workers > tasks) workers = static_cast<unsigned>(tasks);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t lo = next.fetch_add(chunk, std::memory_order_relaxed);
                if (lo >= n) return;
                std::size_t hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace minq
