#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace lambshift {

/// Hardware thread count, overridable through LAMBSHIFT_THREADS.
int default_thread_count();

/// Runs f(i) for i in [begin, end) across up to `threads` workers in fixed
/// contiguous chunks. Each index is visited exactly once; callers write
/// results into slot i, so the outcome is independent of scheduling.
template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, F&& f) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    if (threads < 1) threads = 1;
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, count));
    if (workers == 1) {
        for (std::int64_t i = begin; i < end; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = begin + w * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::int64_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lambshift
