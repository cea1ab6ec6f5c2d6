#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace divorient {

/// Worker count: `requested` if nonzero, else DIVORIENT_THREADS, else hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Runs fn(task, worker) for task in [0, count) on `threads` workers pulling
/// from a shared counter. The first exception thrown is rethrown after all
/// workers stop. Results must not depend on which worker ran a task.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&](unsigned id) {
        for (;;) {
            if (failed.load(std::memory_order_relaxed))
                return;
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                fn(i, id);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id)
        pool.emplace_back(worker, id);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace divorient
