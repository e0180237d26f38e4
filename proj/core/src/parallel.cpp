#include "covercraft/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace covercraft {

namespace {
std::atomic<unsigned> g_worker_limit{0};
}

void set_worker_limit(unsigned workers) { g_worker_limit.store(workers); }

unsigned worker_limit() {
    unsigned limit = g_worker_limit.load();
    if (limit == 0) {
        limit = std::thread::hardware_concurrency();
        if (limit == 0) limit = 1;
    }
    return limit;
}

void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn) {
    const unsigned workers = std::min<std::size_t>(worker_limit(), count);
    if (count == 0) return;
    if (workers <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        if (begin == end) break;
        threads.emplace_back([&, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace covercraft
