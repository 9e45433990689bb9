#pragma once

#include <thread>
#include <vector>

namespace rwb {

// Deterministic fan-out: splits [0, n) into at most `workers` contiguous
// chunks, runs chunk_fn(chunk_index, begin, end) on its own thread, and
// returns the number of chunks. Callers collect per-chunk results by index
// and fold them in order, so output never depends on scheduling.
template <typename F>
int run_chunked(int n, int workers, F&& chunk_fn) {
    if (workers < 1) workers = 1;
    const int chunks = n < workers ? (n > 0 ? n : 1) : workers;
    if (chunks <= 1 || n <= 1) {
        chunk_fn(0, 0, n);
        return 1;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(chunks));
    const int base = n / chunks;
    const int extra = n % chunks;
    int begin = 0;
    for (int i = 0; i < chunks; ++i) {
        const int len = base + (i < extra ? 1 : 0);
        const int end = begin + len;
        threads.emplace_back([&chunk_fn, i, begin, end] { chunk_fn(i, begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    return chunks;
}

} // namespace rwb
