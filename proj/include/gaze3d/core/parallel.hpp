// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gaze3d {

// Global worker count for parallel loops (CLI --threads sets this once
// at startup). 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Static range split over worker threads. Chunk boundaries depend only on
// (n, workers), so per-index work is reproducible; reductions that need
// determinism combine per-chunk results in chunk order.
void parallel_for(size_t n, const std::function<void(size_t begin, size_t end)>& body);

// Convenience per-index form.
inline void parallel_for_each(size_t n, const std::function<void(size_t i)>& body) {
    parallel_for(n, [&](size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) body(i);
    });
}

}  // namespace gaze3d
