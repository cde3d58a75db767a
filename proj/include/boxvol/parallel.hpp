#pragma once

// Minimal chunked fork-join helper. Results must be written to preassigned
// slots so the outcome is independent of scheduling.

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace boxvol {

// Calls fn(begin, end) on roughly equal slices of [0, count). With
// threads <= 1 the call happens inline. The first worker exception (lowest
// slice) is rethrown after all workers join.
template <class Fn>
void parallel_for_chunks(std::size_t count, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t base = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t len = base + (w < extra ? 1 : 0);
        const std::size_t end = begin + len;
        pool.emplace_back([&fn, &errors, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace boxvol
