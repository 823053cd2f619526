#include "fiolab/smooth.hpp"

#include <cmath>

namespace fiolab {

namespace {
inline double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
}  // namespace

double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = mollifier(x);
    const double b = mollifier(1.0 - x);
    return a / (a + b);
}

double plateau(double r, double inner, double outer) {
    return smoothstep((outer - r) / (outer - inner));
}

double standard_bump(double u) {
    const double s = 1.0 - u * u;
    return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

double standard_bump_derivative(double u) {
    const double s = 1.0 - u * u;
    if (s <= 0.0) return 0.0;
    return -2.0 * u / (s * s) * std::exp(-1.0 / s);
}

double standard_bump_derivative_max() {
    static const double cached = [] {
        double m = 0.0;
        const int n = 1 << 21;
        for (int i = 1; i < n; ++i) {
            const double u = -1.0 + 2.0 * i / n;
            m = std::max(m, std::fabs(standard_bump_derivative(u)));
        }
        return m;
    }();
    return cached;
}

}  // namespace fiolab
