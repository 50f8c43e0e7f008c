#include "lattice_forge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace lattice_forge {

std::size_t worker_count()
{
    std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("LATTICE_FORGE_THREADS")) {
        try {
            const long value = std::stol(cap);
            if (value > 0)
                workers = std::min(workers, static_cast<std::size_t>(value));
        } catch (const std::exception&) {
            // ignored: a malformed cap leaves the hardware default
        }
    }
    return workers;
}

void parallel_blocks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body)
{
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        body(0, 0, count);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] {
                try {
                    body(w, begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace lattice_forge
