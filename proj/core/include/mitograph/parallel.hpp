#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace mitograph {

inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Runs body(i) for i in [0, count) on `workers` threads, block-partitioned.
// Each index is processed exactly once; callers make results deterministic by
// writing to per-index slots (or merging per-block state in block order).
// The first exception (by lowest block) is rethrown on the calling thread.
inline void parallel_for_index(std::size_t count, unsigned workers,
                               const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t nblocks =
        std::min<std::size_t>(workers, count);
    std::vector<std::exception_ptr> errors(nblocks);
    std::vector<std::thread> threads;
    threads.reserve(nblocks);
    const std::size_t chunk = (count + nblocks - 1) / nblocks;
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&, b, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace mitograph
