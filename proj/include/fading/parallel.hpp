#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace fading {

// Evaluates fn(0..count-1) on up to `jobs` threads and returns the results in
// index order, so the output never depends on the worker count. jobs <= 0
// means one worker per hardware thread.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, count);

    std::vector<Result> out;
    out.reserve(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(fn(i));
        return out;
    }

    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers)
                        slots[i].emplace(fn(i));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace fading
