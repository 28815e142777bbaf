#pragma once

#include "fmodel/coincidence.hpp"

namespace fmodel::crosscheck {

// Second routes to the quantities the verify harness reports as open flags.
// None of them goes through decomposition::Solver or the Y basis.

/// P_Y(z) = I - F_z (F_a* F_z)^{-1} F_a*, using Y^perp = M_a.
ComplexMatrix projector_py_via_ma(const ModelContext& ctx, cplx z);

double thm51_residual(const ModelContext& ctx, cplx z, const ComplexVector& f);

/// Residuals of the JVariant::paper j, taken from a least-squares solve against F_z.
Eq54Residuals eq54_paper(const ModelContext& ctx, cplx z, const ComplexVector& f);

/// |P_{T*} (L - Theta P_T Theta*) P_{T*}| with L the top-left block of
/// Gamma* P_Y(z) P_Y(w)* Gamma.
double final_kernel_residual(const ModelContext& ctx, cplx z, cplx w);

}  // namespace fmodel::crosscheck
