#ifndef COVHOLE_PARALLEL_HPP
#define COVHOLE_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace covhole {

inline int worker_count() {
    if (const char* env = std::getenv("COVHOLE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Static block partition of [begin, end) across worker threads.  The
 * callback receives (chunk_index, chunk_begin, chunk_end); callers keep
 * per-chunk accumulators and reduce them in index order afterwards, which
 * keeps every result independent of the thread count.
 */
inline void parallel_chunks(long begin, long end, int chunks,
                            const std::function<void(int, long, long)>& body) {
    if (end <= begin || chunks <= 0) return;
    long total = end - begin;
    if (chunks > total) chunks = static_cast<int>(total);
    int workers = std::min(worker_count(), chunks);
    if (workers <= 1) {
        long step = (total + chunks - 1) / chunks;
        for (int c = 0; c < chunks; ++c) {
            long lo = begin + c * step;
            long hi = std::min(end, lo + step);
            if (lo < hi) body(c, lo, hi);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long step = (total + chunks - 1) / chunks;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int c = w; c < chunks; c += workers) {
                long lo = begin + c * step;
                long hi = std::min(end, lo + step);
                if (lo < hi) body(c, lo, hi);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace covhole

#endif
