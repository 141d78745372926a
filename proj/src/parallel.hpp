#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace gdsa {

/// Runs fn(i) for i in [0, total) across `threads` workers on contiguous
/// chunks. Each index must write only its own preallocated slot; output is
/// then independent of the thread count. Worker exceptions are rethrown
/// after join, lowest worker first.
template <typename Fn>
void parallel_for(std::int64_t total, int threads, Fn&& fn) {
    if (total <= 0) return;
    if (threads <= 1 || total == 1) {
        for (std::int64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, total));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min<std::int64_t>(begin + chunk, total);
            try {
                for (std::int64_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace gdsa
