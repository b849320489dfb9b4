#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ttr {

/// Runs fn(i) for i in [0, n) across threads. Work is divided into a fixed
/// number of chunks independent of the thread count, so any floating-point
/// reduction done per chunk stays deterministic regardless of hardware.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned threads = 0) {
    if (n == 0) return;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    constexpr std::size_t kChunks = 64;
    const std::size_t chunks = std::min(kChunks, n);
    const std::size_t chunk_size = (n + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= chunks) return;
                const std::size_t lo = c * chunk_size;
                const std::size_t hi = std::min(n, lo + chunk_size);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ttr
