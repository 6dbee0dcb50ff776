#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ventropy {

/// Runs fn(i) for i in [begin, end) across `workers` threads (0 = hardware
/// count). Callers must write to disjoint slots; results are then independent
/// of the worker count.
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers,
                         const std::function<void(std::uint64_t)>& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    if (workers <= 1 || count < 2 * workers) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + w * chunk;
        const std::uint64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace ventropy
