#pragma once

#include <cstdlib>
#include <vector>

#include "hilbflag/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbflag {

// Worker count for the OpenMP kernels.  HILBFLAG_THREADS wins over the
// OpenMP default so the CLI flag and the env variable behave the same way.
inline int thread_budget() {
    if (const char* env = std::getenv("HILBFLAG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace kernel_detail {

inline QPoly histogram_to_poly(const std::vector<long long>& hist) {
    QPoly out;
    for (size_t e = 0; e < hist.size(); ++e)
        if (hist[e]) out += QPoly::monomial(e, mpz_class((long)hist[e]));
    return out;
}

}  // namespace kernel_detail

template <class F>
QPoly serial_qsum(long long count, F&& exponent_of) {
    std::vector<long long> hist;
    for (long long i = 0; i < count; ++i) {
        int e = exponent_of(i);
        if (e >= (int)hist.size()) hist.resize(e + 1, 0);
        ++hist[e];
    }
    return kernel_detail::histogram_to_poly(hist);
}

// Sum of q^{exponent_of(i)} over i < count, accumulated per thread as a
// plain histogram and merged at the end.  Exponents must be >= 0.
template <class F>
QPoly parallel_qsum(long long count, F&& exponent_of) {
#ifdef _OPENMP
    int threads = thread_budget();
    std::vector<std::vector<long long>> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        std::vector<long long>& hist = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < count; ++i) {
            int e = exponent_of(i);
            if (e >= (int)hist.size()) hist.resize(e + 1, 0);
            ++hist[e];
        }
    }
    std::vector<long long> merged;
    for (const auto& hist : partial) {
        if (hist.size() > merged.size()) merged.resize(hist.size(), 0);
        for (size_t e = 0; e < hist.size(); ++e) merged[e] += hist[e];
    }
    return kernel_detail::histogram_to_poly(merged);
#else
    return serial_qsum(count, exponent_of);
#endif
}

}  // namespace hilbflag
