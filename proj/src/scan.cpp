#include "qdom/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>

namespace qdom {

Caps& caps() {
    static Caps c;
    return c;
}

int& worker_count() {
    static int n = 1;
    return n;
}

std::size_t find_first_serial(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return scan_npos;
}

std::size_t find_first(std::size_t n, const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
    const int workers = worker_count();
    if (workers > 1 && n >= 64) {
        std::atomic<std::size_t> best{scan_npos};
#pragma omp parallel for schedule(static) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            if (idx >= best.load(std::memory_order_relaxed)) continue;
            if (pred(idx)) {
                std::size_t cur = best.load(std::memory_order_relaxed);
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
        return best.load();
    }
#endif
    return find_first_serial(n, pred);
}

std::vector<std::size_t> filter_indices_serial(std::size_t n,
                                               const std::function<bool(std::size_t)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> filter_indices(std::size_t n,
                                        const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
    const int workers = worker_count();
    if (workers > 1 && n >= 64) {
        std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
        {
            const auto tid = static_cast<std::size_t>(omp_get_thread_num());
            auto& mine = parts[tid];
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                const auto idx = static_cast<std::size_t>(i);
                if (pred(idx)) mine.push_back(idx);
            }
        }
        std::vector<std::size_t> out;
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        return out;
    }
#endif
    return filter_indices_serial(n, pred);
}

}  // namespace qdom
