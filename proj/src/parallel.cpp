#include "fiolab/parallel.hpp"

#include <atomic>

namespace fiolab::par {

namespace {
std::atomic<Mode> g_mode{Mode::openmp};
std::atomic<int> g_threads{0};
}  // namespace

Mode mode() { return g_mode.load(std::memory_order_relaxed); }

void set_mode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }

void set_threads(int n) {
    g_threads.store(n, std::memory_order_relaxed);
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#endif
    if (n == 1) set_mode(Mode::serial);
}

int threads() { return g_threads.load(std::memory_order_relaxed); }

}  // namespace fiolab::par
