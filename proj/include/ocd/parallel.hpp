#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ocd {

// Work partitioning with a fixed chunk size, so reduction order and results are
// independent of the worker count. Chunk partials are combined serially in
// chunk order; sums are therefore bit-reproducible run to run.
inline constexpr std::size_t kReduceChunk = 16384;

int hardware_threads();

// Runs fn(begin, end, chunk_index) over [0, n) split into kReduceChunk pieces.
void parallel_for_chunks(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

std::size_t chunk_count(std::size_t n);

// Deterministic sum over [0, n): per-chunk partials (computed possibly in
// parallel) combined in fixed chunk order.
double deterministic_sum(std::size_t n, int threads,
                         const std::function<double(std::size_t, std::size_t)>& chunk_sum);

} // namespace ocd
