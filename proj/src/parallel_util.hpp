// Internal helper: run fn(begin, end) over contiguous index chunks on up to
// `threads` workers. The caller's fn must make the merged result independent
// of the schedule.

#ifndef SPREADCODE_PARALLEL_UTIL_HPP
#define SPREADCODE_PARALLEL_UTIL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace spreadcode::detail {

inline void run_chunked(long long total, int threads,
                        const std::function<void(long long, long long, int)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || total < 2 * threads) {
        fn(0, total, 0);
        return;
    }
    long long chunk = (total + threads - 1) / threads;
    std::vector<std::thread> workers;
    int idx = 0;
    for (long long begin = 0; begin < total; begin += chunk, ++idx) {
        long long end = std::min(total, begin + chunk);
        workers.emplace_back(fn, begin, end, idx);
    }
    for (auto& w : workers) w.join();
}

}  // namespace spreadcode::detail

#endif
