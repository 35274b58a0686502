#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace besk {

// Runs f(i) for i in [0, count) across at most `threads` workers with a
// static block split. Callers collect results into index-addressed slots and
// reduce sequentially afterwards, which keeps outputs independent of the
// thread count.
template <class F>
void parallel_for(std::int64_t count, int threads, F&& f) {
    if (threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) f(i);
        return;
    }
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = count * w / workers;
        const std::int64_t hi = count * (w + 1) / workers;
        pool.emplace_back([lo, hi, &f] {
            for (std::int64_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace besk
