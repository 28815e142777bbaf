#pragma once

#include "fmodel/decomposition.hpp"

namespace fmodel {

struct CoincidenceContext {
  ModelContext ctx;
  ComplexMatrix w;          // D_T (T - a)^{-1} (T* - conj a)^{-1} D_T
  ComplexMatrix s_a;        // -(T* - conj a)^{-1} D_T (I + W)^{-1/2}
  ComplexMatrix gamma_a;    // Julia matrix of S_a
  ComplexMatrix j_swap;     // [[0, I], [I, 0]]
  double defect_identity_residual = 0.0;
};

enum class JVariant { paper, oblique };

struct Eq54Residuals {
  double first = 0.0;
  double second = 0.0;
};

struct CoincidenceSample {
  cplx z;
  ComplexVector f;
  ComplexVector lhs;  // Gamma_a [Theta(z) D_T f; 0]
  ComplexVector rhs;  // P_Y(z) J [D_T f; 0]
  double residual = 0.0;
};

struct FzGramReport {
  double gram_residual = 0.0;
  bool lower_bound_ok = false;
};

struct FinalKernelReport {
  ComplexMatrix lhs;
  ComplexMatrix rhs;
  double residual = 0.0;
};

namespace coincidence {

/// Enforced bound on the defect identity residual.
inline constexpr double kDefectIdentityTol = 1e-10;

CoincidenceContext build(const ModelContext& ctx);

ComplexVector h_vector(const CoincidenceContext& cc, cplx z, const ComplexVector& f);

ComplexVector j_vector(const CoincidenceContext& cc, JVariant variant, cplx z,
                       const ComplexVector& f);

Eq54Residuals eq54_residuals(const CoincidenceContext& cc, JVariant variant, cplx z,
                             const ComplexVector& f);

CoincidenceSample coincidence_residual(const CoincidenceContext& cc, cplx z,
                                       const ComplexVector& f);

FzGramReport fz_gram_check(const CoincidenceContext& cc, cplx z);

FinalKernelReport final_kernel_identity(const CoincidenceContext& cc, cplx z, cplx w);
double final_kernel_identity_residual(const CoincidenceContext& cc, cplx z, cplx w);

/// max(|Gamma* Gamma - I|, |Gamma Gamma* - I|).
double gamma_unitarity_residual(const CoincidenceContext& cc);

}  // namespace coincidence
}  // namespace fmodel
