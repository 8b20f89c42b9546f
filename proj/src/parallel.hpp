#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace mzvkit::detail {

// Runs f(i) for i in [0, n) on an OpenMP team. The first exception thrown by
// any iteration is rethrown after the loop.
template <typename F>
void parallel_for(std::size_t n, int workers, F &&f)
{
    std::exception_ptr error;
    std::mutex error_mutex;
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace mzvkit::detail
