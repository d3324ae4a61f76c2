#include "satgraph/runtime.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace satgraph {

namespace {
std::atomic<int> g_workers{1};
}

int worker_count() { return g_workers.load(); }

void set_worker_count(int n) {
    if (n < 1) throw std::invalid_argument("set_worker_count: need at least one worker");
    g_workers.store(n);
}

void parallel_index_for(int count, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace satgraph
