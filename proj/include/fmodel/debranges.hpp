#pragma once

#include <optional>
#include <vector>

#include "fmodel/model.hpp"

namespace fmodel {

/// Operator pair (E-, E+) built from the model kernel at beta and 1/conj(beta).
struct DeBrangesOperator {
  cplx beta;
  ComplexMatrix norm_plus;   // (rho_beta(beta) K_beta(beta))^{-1/2}
  ComplexMatrix norm_minus;  // (-rho_g(g) K_g(g))^{-1/2}, g = 1/conj(beta)
  ModelContext ctx;
  ComplexMatrix row_beta;  // Y* P_Y(beta)
  ComplexMatrix row_conj;  // Y* P_Y(1/conj(beta))
};

struct DeBrangesValue {
  ComplexMatrix e_minus;
  ComplexMatrix e_plus;
};

struct Condition3Report {
  double max_disc_excess = 0.0;
  double max_arc_defect = 0.0;
  std::size_t disc_points = 0;
  std::size_t arc_points = 0;
  std::vector<cplx> skipped;  // E+ numerically singular there
};

struct ThmMRow {
  cplx z;
  Index dim_mzperp_cap_mbeta;
  Index dim_mzperp_cap_mconj;
};

struct ThmMReport {
  std::vector<ThmMRow> rows;
  Index dim_m0_cap_mbeta_perp = 0;
  Index dim_m0_cap_mconj_perp = 0;
  bool sums_closed = true;  // finite dimension
};

struct FredholmReport {
  bool inv_beta = false;
  bool inv_conj = false;
  bool index_zero = true;
  double sigma_min_beta = 0.0;
  double sigma_min_conj = 0.0;
};

namespace debranges {

/// Relative eigenvalue floor for the normalizer inverse square roots.
inline constexpr double kNormalizerFloor = 1e-10;
/// |1 - z conj(w)| below this switches to the confluent kernel branch.
inline constexpr double kConfluentTol = 1e-6;
inline constexpr double kConfluentStep = 1e-5;

inline cplx rho(cplx w, cplx z) { return 1.0 - z * std::conj(w); }

DeBrangesOperator build(const ModelContext& ctx, cplx beta);

/// Fallback list tried in order; the first beta for which build succeeds wins.
std::vector<cplx> beta_candidates(cplx a);
DeBrangesOperator select_beta(const ModelContext& ctx, std::optional<cplx> preferred = std::nullopt);

DeBrangesValue evaluate(const DeBrangesOperator& e, cplx z);

double reconstruction_residual(const DeBrangesOperator& e, cplx z, cplx w);

/// disc_grid radii (2 disc_grid angles, radii <= 0.95) and arc_grid points of
/// C_eps(a).
Condition3Report condition3_scan(const DeBrangesOperator& e, std::size_t disc_grid,
                                 std::size_t arc_grid, ExecPolicy policy = ExecPolicy::serial);

ThmMReport thm_m_hypotheses(const ModelContext& ctx, cplx beta, const std::vector<cplx>& z_grid);

FredholmReport fredholm_report(const ModelContext& ctx, cplx beta,
                               const std::vector<cplx>& z_grid);

}  // namespace debranges
}  // namespace fmodel
