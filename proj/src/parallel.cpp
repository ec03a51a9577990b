#include "parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qbaker::detail {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("QBAKER_THREADS")) {
        int cap = 0;
        try {
            cap = std::stoi(env);
        } catch (...) {
            cap = 1;  // unparsable cap: stay serial rather than guess
        }
        if (cap < 1) cap = 1;
        if (cap < hw) hw = cap;
    }
    return hw;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    const int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace qbaker::detail
