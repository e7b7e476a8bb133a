// SPDX-License-Identifier: Apache-2.0

#include "gaze3d/core/parallel.hpp"

#include <atomic>

namespace gaze3d {

static std::atomic<unsigned> g_threads{0};

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& body) {
    if (n == 0) return;
    const unsigned workers = std::min<size_t>(thread_count(), n);
    if (workers <= 1) {
        body(0, n);
        return;
    }
    const size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const size_t b = w * chunk;
        const size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&body, b, e] { body(b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gaze3d
