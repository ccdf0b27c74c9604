#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace paralat {

// Index-parallel loop.  fn(i) must write only to caller-owned slots indexed
// by i, which keeps results deterministic regardless of scheduling.  The
// first exception thrown by any worker is rethrown after the join.
template <class F>
void parallel_for(int jobs, long long n, F&& fn) {
    if (n <= 0) return;
    if (jobs < 1) jobs = 1;
    long long nt = std::min<long long>(jobs, n);
    if (nt == 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve((size_t)nt);
    for (long long t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                long long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// Strided worker pool for loops that benefit from per-thread scratch state
// (e.g. memo tables).  fn(worker_index, worker_count) runs once per worker.
template <class F>
void parallel_workers(int jobs, F&& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        fn(0, 1);
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve((size_t)jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            try {
                fn(t, jobs);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace paralat
