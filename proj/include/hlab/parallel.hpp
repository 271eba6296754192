#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace hlab {

/// Process-wide worker count. Defaults to HELFRICH_LAB_THREADS if set,
/// otherwise 1. Results never depend on it: work is split into fixed
/// chunks and combined in index order regardless of scheduling.
inline int& thread_count() {
    static int n = [] {
        if (const char* env = std::getenv("HELFRICH_LAB_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 1;
    }();
    return n;
}

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
template <typename T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
    std::vector<T> out(static_cast<size_t>(std::max(n, 0)));
    int workers = std::min(thread_count(), std::max(n, 1));
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

} // namespace hlab
