#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qlab {

// Worker cap from QUANDLE_LAB_THREADS (hardware concurrency otherwise).
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("QUANDLE_LAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < hw) hw = static_cast<int>(cap);
    }
    return hw;
}

// Runs fn(chunk, begin, end) over a partition of [0, total); chunk results must
// be combined by the caller in chunk order so the outcome is schedule-free.
template <class Fn>
int parallel_chunks(long long total, Fn&& fn) {
    int workers = worker_count();
    if (total < 1024 || workers == 1) {
        if (total > 0) fn(0, 0LL, total);
        return total > 0 ? 1 : 0;
    }
    int chunks = workers;
    long long step = (total + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    int used = 0;
    for (int c = 0; c < chunks; ++c) {
        long long b = c * step, e = std::min(total, b + step);
        if (b >= e) break;
        ++used;
        pool.emplace_back([&fn, c, b, e] { fn(c, b, e); });
    }
    for (auto& t : pool) t.join();
    return used;
}

}  // namespace qlab
