#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace prelie::detail {

inline std::size_t default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs body(begin, end, out) on contiguous chunks of [0, n) and concatenates
// the per-chunk outputs in chunk order, so the result does not depend on the
// number of workers. The first exception thrown by a worker is rethrown.
template <class T, class Body>
std::vector<T> parallel_collect(std::uint64_t n, std::size_t workers, Body body) {
    workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, n == 0 ? 1 : n));
    std::vector<std::vector<T>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::size_t w) {
        std::uint64_t begin = n * w / workers;
        std::uint64_t end = n * (w + 1) / workers;
        try {
            body(begin, end, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p) out.push_back(std::move(x));
    return out;
}

}  // namespace prelie::detail
