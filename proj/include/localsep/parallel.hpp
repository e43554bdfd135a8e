#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace localsep {

/// 0 means "all hardware threads".
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(worker, begin, end) over dynamically scheduled chunks of [0, n).
/// `worker` is in [0, workers) and identifies per-thread scratch state.
/// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, std::size_t chunk, Fn&& fn) {
    if (n == 0) return;
    workers = std::max(1u, workers);
    chunk = std::max<std::size_t>(1, chunk);
    if (workers == 1 || n <= chunk) {
        fn(0u, std::size_t{0}, n);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&](unsigned worker) {
        try {
            for (;;) {
                std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
                if (begin >= n) break;
                fn(worker, begin, std::min(n, begin + chunk));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n, std::memory_order_relaxed);
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(body, w);
    body(0);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace localsep
