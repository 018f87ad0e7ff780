#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qaoa {

/// Runs body(0..count-1) on up to `jobs` worker threads. Tasks must write
/// only to their own output slots; the first thrown exception is rethrown
/// on the caller after all workers join. jobs <= 1 runs inline.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body)
{
    if (count == 0)
        return;
    const std::size_t workers =
        jobs <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace qaoa
