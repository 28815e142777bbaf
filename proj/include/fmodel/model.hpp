#pragma once

#include <vector>

#include "fmodel/decomposition.hpp"
#include "fmodel/parallel.hpp"

namespace fmodel {

struct KernelMatrix {
  cplx z;
  cplx w;
  ComplexMatrix k;  // n x n in Y coordinates
};

struct SBetaResult {
  ComplexVector sf;
  double isometry_residual;
  double vanish_residual;
};

struct InjectivityReport {
  Index combined_kernel_dim = 0;
  bool sufficient = false;  // at least two sample points
};

struct CompressionReport {
  double block_residual = 0.0;
  double model_residual = 0.0;
  double total() const noexcept { return block_residual + model_residual; }
};

namespace model {

/// Membership tolerance for H_beta = M_beta: |P_Y(beta) f| <= tol |f|.
inline constexpr double kHbetaTol = 1e-8;

/// Y* P_Y(z), the n x 2n evaluation map at z in Y coordinates.
ComplexMatrix evaluation_row(const ModelContext& ctx, cplx z);

/// f_Y(z) in Y coordinates, Y* P_Y(z) f.
ComplexVector psi_eval(const ModelContext& ctx, const ComplexVector& f, cplx z);

/// K_w(z) = (Y* P_Y(z)) (Y* P_Y(w))*.
KernelMatrix kernel(const ModelContext& ctx, cplx z, cplx w);

/// Block matrix [K_{p_j}(p_i)] over the given points.
ComplexMatrix kernel_gram(const ModelContext& ctx, const std::vector<cplx>& points);

/// |P_Y(z) V0 (f, 0) - z P_Y(z) (f, 0)| for f in H.
double intertwine_residual(const ModelContext& ctx, cplx z, const ComplexVector& f);

/// Operator-norm form over all of H (+) {0}, reusing an existing evaluation.
double intertwine_residual(const ModelContext& ctx, const PYEvaluation& eval);

/// (g, 0) where g is the H-component of the decomposition of f at z.
ComplexVector apply_r(const ModelContext& ctx, cplx z, const ComplexVector& f);

/// max over aux points w of |(f_Y(w) - f_Y(z)) / (w - z) - (R_z f)_Y(w)|.
double difference_quotient_residual(const ModelContext& ctx, cplx z, const ComplexVector& f,
                                    const std::vector<cplx>& aux);

SBetaResult s_beta(const ModelContext& ctx, cplx beta, const ComplexVector& f);

InjectivityReport injectivity_check(const ModelContext& ctx, const std::vector<cplx>& samples);

/// Block read-off of T from V0 plus the model-side compression of
/// multiplication by z onto Psi(H (+) {0}), recovered from evaluations at the
/// given sample points.
CompressionReport compression_check(const ModelContext& ctx, const std::vector<cplx>& samples);

/// |<f, g> - sum_ij <K_{w_i}(w_j) c_i, d_j>| where f = sum_i X(w_i)* c_i and
/// g = sum_j X(w_j)* d_j are frame expansions (X = Y* P_Y).
double frame_inner_product_residual(const ModelContext& ctx, const std::vector<cplx>& points,
                                    const ComplexMatrix& c, const ComplexMatrix& d);

}  // namespace model
}  // namespace fmodel
