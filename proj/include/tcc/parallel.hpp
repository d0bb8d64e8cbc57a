#ifndef TCC_PARALLEL_HPP
#define TCC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace tcc {

inline int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Below this many indices, thread spawn costs more than the work.
inline constexpr std::int64_t kParallelGrain = 2048;

// Splits [0, n) into one contiguous block per worker and runs
// fn(begin, end) on each. Callers must produce results that do not
// depend on the block boundaries (per-index writes, or partial results
// combined in index order afterwards), so the grain cutoff and the
// worker count never change any result.
template <typename Fn>
void parallel_blocks(std::int64_t n, int workers, Fn&& fn) {
    if (n <= 0) return;
    const std::int64_t w = std::clamp<std::int64_t>(workers, 1, n);
    if (w == 1 || n < kParallelGrain) {
        fn(std::int64_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    for (std::int64_t i = 0; i < w; ++i) {
        const std::int64_t lo = n * i / w;
        const std::int64_t hi = n * (i + 1) / w;
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace tcc

#endif
