#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace grwalk {

// Runs fn(0..count-1) on up to `jobs` threads (0 = hardware concurrency).
// Callers keep determinism by writing into index-addressed slots.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (count == 0)
        return;
    std::size_t want = jobs > 0 ? static_cast<std::size_t>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    want = std::min(want, count);
    if (want <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(want);
    for (std::size_t t = 0; t < want; ++t)
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace grwalk
