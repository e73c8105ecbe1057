#include "qcas/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcas::par {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_max_threads.load() != 1;
#else
    return false;
#endif
}

void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        const int cap = g_max_threads.load();
        const long long m = static_cast<long long>(n);
        if (cap > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(cap)
            for (long long i = 0; i < m; ++i) fn(static_cast<std::size_t>(i));
        } else {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < m; ++i) fn(static_cast<std::size_t>(i));
        }
        return;
    }
#endif
    for_each_index_serial(n, fn);
}

}  // namespace qcas::par
