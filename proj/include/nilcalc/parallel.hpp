#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace nilcalc {

/// Static-chunked parallel loop over [0, n).  Falls back to the calling
/// thread for small ranges.  Chunks are contiguous so deterministic
/// reductions can run per-chunk and combine in fixed order.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers == 1 || n < 4096) {
        body(0, n);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nilcalc
