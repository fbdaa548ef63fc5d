#include "ocd/parallel.hpp"

#include <atomic>
#include <thread>

namespace ocd {

int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : int(n);
}

std::size_t chunk_count(std::size_t n) {
    return (n + kReduceChunk - 1) / kReduceChunk;
}

void parallel_for_chunks(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    const std::size_t nchunks = chunk_count(n);
    if (nchunks == 0) return;
    if (threads <= 1 || nchunks == 1) {
        for (std::size_t c = 0; c < nchunks; ++c) {
            const std::size_t b = c * kReduceChunk;
            fn(b, std::min(n, b + kReduceChunk), c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::size_t b = c * kReduceChunk;
            fn(b, std::min(n, b + kReduceChunk), c);
        }
    };
    std::vector<std::thread> pool;
    const int nw = std::min<std::size_t>(threads, nchunks);
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

double deterministic_sum(std::size_t n, int threads,
                         const std::function<double(std::size_t, std::size_t)>& chunk_sum) {
    std::vector<double> partial(chunk_count(n), 0.0);
    parallel_for_chunks(n, threads, [&](std::size_t b, std::size_t e, std::size_t c) {
        partial[c] = chunk_sum(b, e);
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

} // namespace ocd
