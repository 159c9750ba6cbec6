#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace z2coh {

// Default fan-out width for range subcommands; overridable per call.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("Z2COH_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

// Runs fn(i) for i in [begin, end). Each index must write only its own
// output slot; results are then deterministic regardless of width.
template <typename Fn>
void parallel_for(int begin, int end, unsigned jobs, Fn&& fn) {
    if (end <= begin) return;
    const unsigned width = std::min<unsigned>(jobs, static_cast<unsigned>(end - begin));
    if (width <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int> next(begin);
    std::vector<std::thread> workers;
    workers.reserve(width);
    for (unsigned t = 0; t < width; ++t)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1)) fn(i);
        });
    for (auto& w : workers) w.join();
}

}  // namespace z2coh
