#pragma once

#include "fiolab/grid.hpp"

namespace fiolab {

// Riemann-sum quadrature norms. Accuracy is controlled by grid refinement.
double l1_norm(const SampledFunction& f);

// L^1 with weight (1+|y|)^s, s >= 0.
double weighted_l1_norm(const SampledFunction& f, double s);

double l2_norm(const SampledFunction& f);

// h^d Σ f_i conj(g_i); grids must match.
std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g);

double max_abs(const SampledFunction& f);

}  // namespace fiolab
