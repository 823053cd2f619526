#include "fiolab/grid.hpp"

#include <cmath>
#include <string>

namespace fiolab {

std::size_t Grid::total_points() const {
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(points_per_axis);
    return n;
}

void Grid::unravel(std::size_t flat, int* idx) const {
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % static_cast<std::size_t>(points_per_axis));
        flat /= static_cast<std::size_t>(points_per_axis);
    }
}

Point Grid::point_at(std::size_t flat) const {
    int idx[3] = {0, 0, 0};
    unravel(flat, idx);
    Point p{};
    for (int a = 0; a < dim; ++a) p[a] = coordinate(idx[a]);
    return p;
}

Grid Grid::dual() const {
    Grid g;
    g.dim = dim;
    g.points_per_axis = points_per_axis;
    g.half_extent = points_per_axis / (4.0 * half_extent);
    g.spacing = 2.0 * g.half_extent / points_per_axis;
    return g;
}

bool Grid::compatible(const Grid& o, double rel_tol) const {
    if (dim != o.dim || points_per_axis != o.points_per_axis) return false;
    return std::fabs(half_extent - o.half_extent) <=
           rel_tol * std::max(std::fabs(half_extent), std::fabs(o.half_extent));
}

Grid make_grid(int dim, int points_per_axis, double half_extent) {
    if (dim < 1 || dim > 3)
        throw PreconditionError("make_grid: dim must be 1, 2 or 3");
    if (points_per_axis < 8 || !is_pow2(static_cast<std::size_t>(points_per_axis)))
        throw PreconditionError("make_grid: points_per_axis must be a power of two >= 8, got " +
                                std::to_string(points_per_axis));
    if (!(half_extent > 0.0))
        throw PreconditionError("make_grid: half_extent must be positive");

    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= static_cast<std::size_t>(points_per_axis);
        if (total > memory_budget())
            throw PolicyError("make_grid: " + std::to_string(points_per_axis) + "^" +
                                  std::to_string(dim) + " points exceed the memory budget of " +
                                  std::to_string(memory_budget()),
                              total);
    }

    Grid g;
    g.dim = dim;
    g.points_per_axis = points_per_axis;
    g.half_extent = half_extent;
    g.spacing = 2.0 * half_extent / points_per_axis;
    return g;
}

SampledFunction SampledFunction::zeros(const Grid& g, SpaceTag tag) {
    SampledFunction f;
    f.grid = g;
    f.space_tag = tag;
    f.values.assign(g.total_points(), std::complex<double>{0.0, 0.0});
    return f;
}

bool SampledFunction::all_finite() const {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace fiolab
