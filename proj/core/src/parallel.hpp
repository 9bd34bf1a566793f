#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmclass::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t work)
{
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(requested, work)));
}

// Calls fn(index, worker) for every index in [0, count), spread over
// `workers` threads pulling indices from a shared counter. The first
// exception thrown by any worker is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn)
{
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++)
                        fn(i, w);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace rmclass::detail
