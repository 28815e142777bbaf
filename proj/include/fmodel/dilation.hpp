#pragma once

#include <optional>

#include "fmodel/contraction.hpp"

namespace fmodel {

struct ModelContext;

/// V0 = V = [[T, 0], [D_T, 0]] on H (+) H together with the Julia extension
/// V~ = [[T, D_{T*}], [D_T, -T*]].
struct DilationPair {
  ComplexMatrix v0;
  ComplexMatrix v;
  ComplexMatrix v_tilde;
  Subspace ker_v;
  Subspace ker_v_perp;
  Subspace ker_vstar;
  bool ker_v_symbolic = true;
  // gap between the block-structure ker V and the numerically computed one
  double ker_v_mismatch = 0.0;
};

struct CayleyResiduals {
  double inv = 0.0;
  double map_m = 0.0;
  std::optional<double> map_mperp;  // absent when z or w is 0
};

namespace dilation {

DilationPair build(const Contraction& c);

/// Greedy multiset distance between eig(V) and eig(T) with n extra zeros.
double spectrum_union_residual(const DilationPair& d, const Contraction& c);

/// sigma_min(V - aI); throws DegenerateRegularity at or below tol.
double regular_type_constant(const DilationPair& d, cplx a, double tol = 1e-10);

/// U_zw = I + (z - w)(V~ - zI)^{-1}.
ComplexMatrix cayley(const DilationPair& d, cplx z, cplx w, double tol = 1e-10);

CayleyResiduals cayley_lemma_residuals(const DilationPair& d, const ModelContext& ctx, cplx z,
                                       cplx w);

/// max(|V~*V~ - I|, |V~V~* - I|).
double julia_unitarity_residual(const DilationPair& d);

/// |(V~ - V0) restricted to (ker V)^perp|.
double extension_agreement_residual(const DilationPair& d);

/// max over columns h of | |V0 (h, 0)| - |h| |.
double isometry_residual(const DilationPair& d, const ComplexMatrix& h_samples);

/// Gap between ker V* and the column space of [D_{T*}; -T*].
double ker_vstar_residual(const DilationPair& d, const Contraction& c);

}  // namespace dilation
}  // namespace fmodel
