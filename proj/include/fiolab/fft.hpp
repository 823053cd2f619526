#pragma once

#include "fiolab/grid.hpp"

namespace fiolab {

// Continuous-normalization transform pair on centered grids with the zero
// frequency at the grid center:
//   forward_ft: f̂(u) = ∫ f(t) e^{-2πi t·u} dt  ≈  h^d · shifted DFT
//   inverse_ft: exact inverse on the dual grid (up to roundoff).
SampledFunction forward_ft(const SampledFunction& f);
SampledFunction inverse_ft(const SampledFunction& f);

}  // namespace fiolab
