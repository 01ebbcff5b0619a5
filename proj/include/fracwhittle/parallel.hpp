#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fracwhittle {

/// Runs fn(0..count-1) across up to `workers` threads (<= 0 means hardware
/// concurrency). Work-stealing over an atomic index; the first exception is
/// captured and rethrown after all threads join. Callers must make fn(i)
/// independent of scheduling order for deterministic results.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t nthreads = workers > 0 ? static_cast<std::size_t>(workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace fracwhittle
