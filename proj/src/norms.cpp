#include "fiolab/norms.hpp"

#include <cmath>

namespace fiolab {

namespace {
double cell_volume(const Grid& g) {
    double v = 1.0;
    for (int a = 0; a < g.dim; ++a) v *= g.spacing;
    return v;
}
}  // namespace

double l1_norm(const SampledFunction& f) {
    return cell_volume(f.grid) *
           par::sum(f.values.size(), [&](std::size_t i) { return std::abs(f.values[i]); });
}

double weighted_l1_norm(const SampledFunction& f, double s) {
    if (s < 0.0) throw PreconditionError("weighted_l1_norm: s must be >= 0");
    const Grid& g = f.grid;
    return cell_volume(g) * par::sum(f.values.size(), [&](std::size_t i) {
               const double r = norm(g.point_at(i), g.dim);
               return std::pow(1.0 + r, s) * std::abs(f.values[i]);
           });
}

double l2_norm(const SampledFunction& f) {
    return std::sqrt(cell_volume(f.grid) * par::sum(f.values.size(), [&](std::size_t i) {
                         return std::norm(f.values[i]);
                     }));
}

std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (!f.grid.compatible(g.grid))
        throw PreconditionError("inner_product: grids differ");
    return cell_volume(f.grid) * par::sum_complex(f.values.size(), [&](std::size_t i) {
               return f.values[i] * std::conj(g.values[i]);
           });
}

double max_abs(const SampledFunction& f) {
    if (f.values.empty()) return 0.0;
    return par::max_value(f.values.size(), [&](std::size_t i) { return std::abs(f.values[i]); });
}

}  // namespace fiolab
