#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace polytrace::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Splits [lo, hi) into contiguous chunks, runs fn(a, b) on each, and merges
// the partial results in chunk order. The merge order is fixed, so the result
// does not depend on scheduling.
template <class Result, class Fn, class Merge>
Result parallel_chunks(std::uint64_t lo, std::uint64_t hi, int threads, Fn fn, Merge merge) {
    const int t = resolve_threads(threads);
    const std::uint64_t span = hi > lo ? hi - lo : 0;
    if (t <= 1 || span < 1024) return fn(lo, hi);

    const std::uint64_t chunks = std::min<std::uint64_t>(span, static_cast<std::uint64_t>(t) * 8);
    std::vector<Result> parts(chunks);
    std::vector<std::thread> workers;
    workers.reserve(t);
    std::atomic<std::uint64_t> next{0};
    for (int w = 0; w < t; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= chunks) return;
                const std::uint64_t a = lo + span * i / chunks;
                const std::uint64_t b = lo + span * (i + 1) / chunks;
                parts[i] = fn(a, b);
            }
        });
    }
    for (auto& w : workers) w.join();

    Result acc = std::move(parts[0]);
    for (std::uint64_t i = 1; i < chunks; ++i) acc = merge(std::move(acc), std::move(parts[i]));
    return acc;
}

}  // namespace polytrace::detail
