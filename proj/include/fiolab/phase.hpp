#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab {

enum class PhaseKind { constant, hoelder_power, smooth_diffeo, custom };

// Radial phase family: the frequency warp is phi_tilde(u) = beta(|u|) u.
//   constant      beta(r) = a
//   hoelder_power beta(r) = a + b * rho(r) * r^gamma, gamma in (-1, 1],
//                 rho a C^∞ plateau, 1 for r <= cutoff_radius,
//                 0 for r >= 2*cutoff_radius
//   smooth_diffeo (d=1) phi_tilde(u) = u + c * psi(u), psi the standard bump
//                 on (-1,1); |c| * max|psi'| <= 1/2 keeps it a diffeomorphism
//                 and phi_tilde(u) = u for |u| >= 1
//   custom        caller-supplied evaluator (library only; must be stateless)
struct PhaseSpec {
    PhaseKind kind = PhaseKind::constant;
    double a = 0.0;
    double b = 0.0;
    double gamma = 1.0;
    double cutoff_radius = 1.0;
    double perturbation_amplitude = 0.0;
    std::function<Point(const Point&, int)> evaluator;
    // Required for custom phases when a grid policy needs sup |D phi_tilde|.
    double custom_sup_jacobian = 0.0;

    static PhaseSpec constant(double a);
    static PhaseSpec hoelder(double a, double b, double gamma, double cutoff_radius = 1.0);
    static PhaseSpec diffeo(double perturbation_amplitude);
    static PhaseSpec custom(std::function<Point(const Point&, int)> eval, double sup_jacobian);

    double beta(double r) const;           // built-in kinds only
    double beta_times_r(double r) const;   // r * beta(r)

    std::string to_json_string() const;
    static PhaseSpec from_json_string(const std::string& s);
};

Point eval_phi_tilde(const PhaseSpec& phase, const Point& u, int dim);

// Empirical sup over r in (0, r_max] of max(|d(beta r)/dr|, |beta|); for the
// smooth_diffeo kind, sup |phi_tilde'|. Bounds the frequency-warp Jacobian.
double sup_jacobian(const PhaseSpec& phase, double r_max);

// Rescaled phase used for |y| >= 1:
//   B_y(u) = 2π beta(|u|/|y|^{1/(gamma+1)}) (u/|y|^{1/(gamma+1)}) · y.
std::function<double(const Point&)> rescaled_phase(const PhaseSpec& phase, const Point& y,
                                                   int dim, double gamma);

struct HypothesisReport {
    int order_checked = 0;           // small-|u| orders go up to l, large up to 2l
    double worst_ratio_small_u = 0;  // sup |∂^α phi~|/|u|^{gamma+1-|α|}, |u| <= 1
    double worst_bound_large_u = 0;  // sup |∂^α phi~|, |u| >= 1, 2 <= |α|
    int samples_used = 0;
    bool pass = false;
    double ceiling_small = 0;
    double ceiling_large = 0;
    // Per-decade sup of the small-|u| ratio, decades of |u| from 1e-4 up to 1.
    std::vector<double> per_decade_ratio;
};

struct HypothesisOptions {
    int max_order = 0;  // 0 -> l = floor(d/2)+1 small-u, 2l large-u
    int sample_count = 512;
    std::uint64_t seed = 1;
    double ceiling_small = 30.0;
    double ceiling_large = 200.0;
};

// Probes the derivative bounds of the reduced warp (beta - a)(|u|) u against
// the exponent gamma, by central finite differences.
HypothesisReport verify_hoelder_hypotheses(const PhaseSpec& phase, int dim,
                                           const HypothesisOptions& opts = {});

struct MonotonicityReport {
    double beta_inf = 0.0;
    double slope_min = 0.0;  // min d/dr (beta(r) r)
    double slope_max = 0.0;
};

MonotonicityReport verify_l2_hypotheses(const PhaseSpec& phase, double r_min, double r_max,
                                        int samples);

}  // namespace fiolab
