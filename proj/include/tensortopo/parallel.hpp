#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tensortopo {

// Runs body(i) for i in [0, n) on up to `jobs` threads. Callers write
// results into per-index slots so the merge order never depends on timing.
// The exception from the lowest failing index is rethrown.
template <class Body>
void parallel_for(int n, int jobs, Body body) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex mu;
    int failed_at = n;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, n);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < failed_at) {
                        failed_at = i;
                        error = std::current_exception();
                    }
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace tensortopo
