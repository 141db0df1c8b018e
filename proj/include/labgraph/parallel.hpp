#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace labgraph::par {

// Worker count policy. LABGRAPH_THREADS caps the pool (0 or unset = auto).
// Tests and the kernel benchmark override it programmatically.
inline int& thread_override() {
    static int value = -1; // -1 = not overridden
    return value;
}

inline void set_max_threads(int n) { thread_override() = n; }

inline int max_threads() {
    if (thread_override() >= 0 && thread_override() != 0) return thread_override();
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    if (thread_override() == 0) return hw;
    if (const char* env = std::getenv("LABGRAPH_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n < hw ? n : hw;
    }
    return hw;
}

// Parallel loop over [0, n). The body must only write state owned by index i;
// callers reduce results afterwards in a fixed order, which keeps every output
// bitwise independent of the worker count.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
#ifdef _OPENMP
    int workers = max_threads();
    if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    for (int i = 0; i < n; ++i) fn(i);
}

// Serial reference path. Kept separate so tests and the kernel benchmark can
// compare it against parallel_for on identical inputs.
template <typename Fn>
void serial_for(int n, Fn&& fn) {
    for (int i = 0; i < n; ++i) fn(i);
}

} // namespace labgraph::par
