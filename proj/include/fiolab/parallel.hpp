#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fiolab::par {

enum class Mode { serial, openmp };

Mode mode();
void set_mode(Mode m);

// 0 leaves the OpenMP runtime default untouched.
void set_threads(int n);
int threads();

// Element-wise map over [0, n). Each index must write disjoint state.
template <class F>
void for_each(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (mode() == Mode::openmp && n > 1) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

inline constexpr std::size_t kSumChunk = 8192;

// Chunked reduction with a thread-count-independent combination order:
// each fixed chunk is accumulated left to right, chunk partials are added
// in chunk order. Serial and OpenMP evaluation produce identical bits.
template <class F>
double sum(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(chunks);
    for_each(chunks, [&](std::size_t c) {
        const std::size_t lo = c * kSumChunk;
        const std::size_t hi = std::min(n, lo + kSumChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

template <class F>
std::complex<double> sum_complex(std::size_t n, F&& term) {
    if (n == 0) return {0.0, 0.0};
    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<std::complex<double>> partial(chunks);
    for_each(chunks, [&](std::size_t c) {
        const std::size_t lo = c * kSumChunk;
        const std::size_t hi = std::min(n, lo + kSumChunk);
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    std::complex<double> total{0.0, 0.0};
    for (const auto& s : partial) total += s;
    return total;
}

template <class F>
double max_value(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(chunks);
    for_each(chunks, [&](std::size_t c) {
        const std::size_t lo = c * kSumChunk;
        const std::size_t hi = std::min(n, lo + kSumChunk);
        double m = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) m = std::max(m, term(i));
        partial[c] = m;
    });
    double m = partial[0];
    for (double v : partial) m = std::max(m, v);
    return m;
}

}  // namespace fiolab::par
