#pragma once

#include <cstddef>
#include <functional>

namespace lattice_forge {

/// Number of worker threads: hardware concurrency, capped by the
/// LATTICE_FORGE_THREADS environment variable when it holds a positive integer.
std::size_t worker_count();

/// Splits [0, count) into contiguous blocks, one per worker, and calls
/// body(worker, begin, end) for each. Blocks depend only on (count, workers).
void parallel_blocks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

} // namespace lattice_forge
