#pragma once

#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace gsep {

enum class Execution { serial, parallel };

/**
 * @brief Evaluates fn(0), ..., fn(count - 1) and returns the results in index order.
 *
 * With Execution::parallel the calls are distributed over OpenMP threads.
 * Results never depend on the schedule; callers select among them by
 * (value, index). The first exception thrown by any call is rethrown.
 */
template <class F>
auto indexed_map(int count, F &&fn, Execution execution) -> std::vector<std::invoke_result_t<F &, int>> {
    using Result = std::invoke_result_t<F &, int>;
    std::vector<std::optional<Result>> slots(static_cast<std::size_t>(count > 0 ? count : 0));
    std::exception_ptr failure;

    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                slots[static_cast<std::size_t>(i)].emplace(fn(i));
            } catch (...) {
#pragma omp critical(gsep_indexed_map_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    } else {
        for (int i = 0; i < count; ++i) {
            slots[static_cast<std::size_t>(i)].emplace(fn(i));
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<Result> out;
    out.reserve(slots.size());
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

}  // namespace gsep
