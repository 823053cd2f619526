#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fiolab/common.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

enum class SpaceTag : std::uint8_t { position = 0, frequency = 1 };

using Point = std::array<double, 3>;

inline double dot(const Point& a, const Point& b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Point& a, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += a[i] * a[i];
    return std::sqrt(s);
}

inline Point scaled(const Point& a, double c, int dim) {
    Point r{};
    for (int i = 0; i < dim; ++i) r[i] = c * a[i];
    return r;
}

// Uniform centered cube [-R, R)^d, N samples per axis, N a power of two.
// spacing = 2R/N is exact in binary floating point.
struct Grid {
    int dim = 1;
    int points_per_axis = 0;
    double half_extent = 0.0;
    double spacing = 0.0;

    std::size_t total_points() const;
    double coordinate(int i) const { return (i - points_per_axis / 2) * spacing; }
    void unravel(std::size_t flat, int* idx) const;
    Point point_at(std::size_t flat) const;

    // Frequency grid paired with this one: spacing 1/(2R), half extent N/(4R).
    Grid dual() const;

    bool compatible(const Grid& o, double rel_tol = 1e-9) const;
};

Grid make_grid(int dim, int points_per_axis, double half_extent);

struct SampledFunction {
    Grid grid;
    SpaceTag space_tag = SpaceTag::position;
    std::vector<std::complex<double>> values;

    static SampledFunction zeros(const Grid& g, SpaceTag tag);
    bool all_finite() const;
};

template <class F>
SampledFunction sample_on_grid(const Grid& g, SpaceTag tag, F&& fn) {
    SampledFunction out = SampledFunction::zeros(g, tag);
    par::for_each(g.total_points(),
                  [&](std::size_t i) { out.values[i] = fn(g.point_at(i)); });
    return out;
}

}  // namespace fiolab
