#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hyper {

inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every i in [0, count) from `workers` threads pulling
/// indices in increasing order. The first exception thrown is rethrown.
template <typename F>
void parallel_for(std::size_t count, unsigned workers, F&& fn)
{
    workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        next = count;
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace hyper
