#include "fiolab/fft.hpp"

#include <fftw3.h>

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace fiolab {

namespace {

struct PlanKey {
    int rank;
    std::array<int, 3> n;
    int sign;
    bool operator<(const PlanKey& o) const {
        return std::tie(rank, n, sign) < std::tie(o.rank, o.n, o.sign);
    }
};

std::mutex g_plan_mutex;
std::map<PlanKey, fftw_plan> g_plans;

// Plans are cached per (shape, direction). FFTW_UNALIGNED keeps a cached plan
// valid for any buffers handed to fftw_execute_dft; the planner itself is not
// thread safe, so creation is serialized.
void execute_dft(int rank, const std::array<int, 3>& n, int sign,
                 std::complex<double>* in, std::complex<double>* out) {
    PlanKey key{rank, n, sign};
    fftw_plan plan = nullptr;
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        auto it = g_plans.find(key);
        if (it == g_plans.end()) {
            plan = fftw_plan_dft(rank, n.data(), reinterpret_cast<fftw_complex*>(in),
                                 reinterpret_cast<fftw_complex*>(out), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
            g_plans.emplace(key, plan);
        } else {
            plan = it->second;
        }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
}

inline int index_parity(std::size_t flat, int n, int dim) {
    int p = 0;
    for (int a = 0; a < dim; ++a) {
        p ^= static_cast<int>(flat % static_cast<std::size_t>(n)) & 1;
        flat /= static_cast<std::size_t>(n);
    }
    return p;
}

// Centered transform via the (-1)^j pre/post twiddle: for N divisible by 4
// the leftover phase e^{-iπN/2} is exactly 1.
SampledFunction centered_transform(const SampledFunction& f, int sign, SpaceTag out_tag) {
    const Grid& g = f.grid;
    const std::size_t total = g.total_points();
    const int N = g.points_per_axis;
    const int d = g.dim;

    std::vector<std::complex<double>> tmp(total);
    par::for_each(total, [&](std::size_t i) {
        tmp[i] = index_parity(i, N, d) ? -f.values[i] : f.values[i];
    });

    SampledFunction out;
    out.grid = g.dual();
    out.space_tag = out_tag;
    out.values.resize(total);

    std::array<int, 3> dims{N, N, N};
    execute_dft(d, dims, sign, tmp.data(), out.values.data());

    double scale = 1.0;
    for (int a = 0; a < d; ++a) scale *= g.spacing;
    par::for_each(total, [&](std::size_t k) {
        out.values[k] = (index_parity(k, N, d) ? -out.values[k] : out.values[k]) * scale;
    });
    return out;
}

}  // namespace

SampledFunction forward_ft(const SampledFunction& f) {
    if (f.space_tag != SpaceTag::position)
        throw PreconditionError("forward_ft: input must be position-space");
    return centered_transform(f, FFTW_FORWARD, SpaceTag::frequency);
}

SampledFunction inverse_ft(const SampledFunction& f) {
    if (f.space_tag != SpaceTag::frequency)
        throw PreconditionError("inverse_ft: input must be frequency-space");
    return centered_transform(f, FFTW_BACKWARD, SpaceTag::position);
}

}  // namespace fiolab
