#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace vinc::detail {

inline int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Runs fn(part) for part = 0..parts-1 on up to `workers` threads. Exceptions
 * are collected and the one from the lowest partition index is rethrown, so
 * failure behaviour does not depend on the worker count.
 */
inline void run_partitions(int parts, int workers, const std::function<void(int)>& fn) {
    workers = resolve_workers(workers);
    if (parts <= 0) return;
    if (workers <= 1 || parts == 1) {
        std::exception_ptr first;
        for (int p = 0; p < parts; ++p) {
            try {
                fn(p);
            } catch (...) {
                if (!first) first = std::current_exception();
            }
        }
        if (first) std::rethrow_exception(first);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(parts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int p = next.fetch_add(1);
            if (p >= parts) return;
            try {
                fn(p);
            } catch (...) {
                errors[static_cast<std::size_t>(p)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(workers, parts);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace vinc::detail
