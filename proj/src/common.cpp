#include "fiolab/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace fiolab {

namespace {

std::size_t initial_budget() {
    if (const char* env = std::getenv("FIOLAB_MAX_POINTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v >= 64) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 23;
}

std::atomic<std::size_t> g_budget{initial_budget()};

}  // namespace

std::size_t memory_budget() { return g_budget.load(std::memory_order_relaxed); }

void set_memory_budget(std::size_t points) {
    g_budget.store(points, std::memory_order_relaxed);
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, digits - 1 - std::floor(std::log10(std::fabs(x))));
    return std::round(x * mag) / mag;
}

}  // namespace fiolab
