#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace p7c5 {

// Applies fn to every index and collects results in input order.  All the
// analysis kernels in this library are pure functions over immutable graphs,
// so fanning a stream out over threads needs nothing more than this.
// jobs == 1 is the serial reference path; tests pin parallel output against
// it, and the bench target compares their throughput.
template <typename Result>
std::vector<Result> batch_map(int count, int jobs, const std::function<Result(int)>& fn) {
    std::vector<Result> out(count);
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
#ifdef _OPENMP
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (int i = 0; i < count; ++i) {
        try {
            out[i] = fn(i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
#else
    for (int i = 0; i < count; ++i) out[i] = fn(i);
#endif
    return out;
}

} // namespace p7c5
