#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace sl4 {

inline int resolve_threads(int threads) {
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    return threads <= 0 ? 1 : threads;
}

/// Run fn(chunk_index, begin, end) over [0, total) on up to `threads`
/// workers (0 = hardware concurrency). Chunks are contiguous, so per-chunk
/// results can be merged deterministically by chunk index afterwards.
template <typename Fn>
int parallel_chunks(long long total, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (total <= 0) return 0;
    threads = (int)std::min<long long>(threads, total);
    const long long chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    int launched = 0;
    for (int ti = 0; ti < threads; ++ti) {
        const long long b = ti * chunk;
        const long long e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, ti, b, e] { fn(ti, b, e); });
        ++launched;
    }
    for (auto& th : pool) th.join();
    return launched;
}

} // namespace sl4
