#include "fmodel/debranges.hpp"

#include <algorithm>
#include <cmath>

#include "fmodel/geometry.hpp"
#include "fmodel/grids.hpp"

namespace fmodel::debranges {

namespace {

ComplexMatrix kernel_at(const ModelContext& ctx, cplx z, cplx w) {
  return model::kernel(ctx, z, w).k;
}

cplx conj_point(cplx beta) { return 1.0 / std::conj(beta); }

ComplexMatrix numerator(const DeBrangesValue& ez, const DeBrangesValue& ew) {
  return ez.e_plus * ew.e_plus.adjoint() - ez.e_minus * ew.e_minus.adjoint();
}

}  // namespace

DeBrangesOperator build(const ModelContext& ctx, cplx beta) {
  if (beta == cplx(0.0) || !(std::abs(beta) < 1.0)) {
    throw Error(ErrorKind::BadBeta, "beta must lie in the punctured unit disc");
  }
  const cplx g = conj_point(beta);
  if (!decomposition::in_omega(ctx, beta) || !decomposition::in_omega(ctx, g)) {
    throw Error(ErrorKind::BadBeta, "beta or 1/conj(beta) outside Omega_a");
  }
  ComplexMatrix row_beta = model::evaluation_row(ctx, beta);
  ComplexMatrix row_conj = model::evaluation_row(ctx, g);
  const ComplexMatrix plus = rho(beta, beta) * (row_beta * row_beta.adjoint());
  const ComplexMatrix minus = -rho(g, g) * (row_conj * row_conj.adjoint());
  return DeBrangesOperator{beta,
                           numcore::hermitian_inv_sqrt(plus, kNormalizerFloor),
                           numcore::hermitian_inv_sqrt(minus, kNormalizerFloor),
                           ctx,
                           std::move(row_beta),
                           std::move(row_conj)};
}

std::vector<cplx> beta_candidates(cplx a) {
  const cplx i(0.0, 1.0);
  return {a / 2.0, a / 3.0, i * a / 2.0, -i * a / 2.0, 2.0 * a / 3.0, a / 4.0, i * a / 3.0};
}

DeBrangesOperator select_beta(const ModelContext& ctx, std::optional<cplx> preferred) {
  if (preferred) return build(ctx, *preferred);
  for (cplx beta : beta_candidates(ctx.a)) {
    try {
      return build(ctx, beta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularNormalizer) throw;
    }
  }
  throw Error(ErrorKind::SingularNormalizer, "every candidate beta gave a singular normalizer");
}

DeBrangesValue evaluate(const DeBrangesOperator& e, cplx z) {
  if (!decomposition::in_omega(e.ctx, z)) {
    throw Error(ErrorKind::DomainError, "point outside Omega_a");
  }
  const cplx g = conj_point(e.beta);
  const ComplexMatrix row = model::evaluation_row(e.ctx, z);
  DeBrangesValue out;
  out.e_plus = rho(e.beta, z) * (row * e.row_beta.adjoint()) * e.norm_plus;
  out.e_minus = -rho(g, z) * (row * e.row_conj.adjoint()) * e.norm_minus;
  return out;
}

double reconstruction_residual(const DeBrangesOperator& e, cplx z, cplx w) {
  if (!decomposition::in_omega(e.ctx, z) || !decomposition::in_omega(e.ctx, w)) {
    throw Error(ErrorKind::DomainError, "point outside Omega_a");
  }
  const ComplexMatrix k = kernel_at(e.ctx, z, w);
  const DeBrangesValue ew = evaluate(e, w);
  const cplx r = rho(w, z);
  if (std::abs(r) >= kConfluentTol) {
    return numcore::op_norm(numerator(evaluate(e, z), ew) / r - k);
  }
  // Confluent branch: the numerator vanishes at z = 1/conj(w), so the quotient
  // is its z-derivative over d rho_w / dz = -conj(w).
  cplx step(kConfluentStep, 0.0);
  if (!decomposition::in_omega(e.ctx, z + step) || !decomposition::in_omega(e.ctx, z - step)) {
    step = cplx(0.0, kConfluentStep);
  }
  const ComplexMatrix derivative =
      (numerator(evaluate(e, z + step), ew) - numerator(evaluate(e, z - step), ew)) /
      (2.0 * step);
  return numcore::op_norm(derivative / (-std::conj(w)) - k);
}

Condition3Report condition3_scan(const DeBrangesOperator& e, std::size_t disc_grid,
                                 std::size_t arc_grid, ExecPolicy policy) {
  struct Sample {
    double value = 0.0;
    bool skipped = false;
  };
  const std::vector<cplx> disc = grids::disc_grid(disc_grid, 2 * disc_grid);
  const std::vector<cplx> arc = geometry::arc_samples(e.ctx, arc_grid);
  std::vector<cplx> points = disc;
  points.insert(points.end(), arc.begin(), arc.end());

  const auto samples = map_indexed(points.size(), policy, [&](std::size_t i) {
    Sample s;
    const DeBrangesValue v = evaluate(e, points[i]);
    const double top = numcore::op_norm(v.e_plus);
    if (!(numcore::sigma_min(v.e_plus) > 1e-10 * top)) {
      s.skipped = true;
      return s;
    }
    const ComplexMatrix b = v.e_plus.partialPivLu().solve(v.e_minus);
    if (i < disc.size()) {
      s.value = std::max(0.0, numcore::op_norm(b) - 1.0);
    } else {
      const ComplexMatrix id = numcore::identity(b.rows());
      s.value = std::max(numcore::op_norm(b.adjoint() * b - id),
                         numcore::op_norm(b * b.adjoint() - id));
    }
    return s;
  });

  Condition3Report out;
  out.disc_points = disc.size();
  out.arc_points = arc.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (samples[i].skipped) {
      out.skipped.push_back(points[i]);
      continue;
    }
    double& slot = i < disc.size() ? out.max_disc_excess : out.max_arc_defect;
    if (std::isnan(samples[i].value) || samples[i].value > slot) slot = samples[i].value;
  }
  return out;
}

ThmMReport thm_m_hypotheses(const ModelContext& ctx, cplx beta, const std::vector<cplx>& z_grid) {
  const cplx g = conj_point(beta);
  const Subspace m_beta = decomposition::subspace_m(ctx, beta);
  const Subspace m_conj = decomposition::subspace_m(ctx, g);
  const Subspace m0 = decomposition::subspace_m(ctx, cplx(0.0));
  ThmMReport out;
  for (cplx z : z_grid) {
    const Subspace mz_perp = decomposition::subspace_m(ctx, z).orthogonal_complement();
    out.rows.push_back(ThmMRow{z, numcore::intersection_dim(mz_perp, m_beta),
                               numcore::intersection_dim(mz_perp, m_conj)});
  }
  out.dim_m0_cap_mbeta_perp = numcore::intersection_dim(m0, m_beta.orthogonal_complement());
  out.dim_m0_cap_mconj_perp = numcore::intersection_dim(m0, m_conj.orthogonal_complement());
  return out;
}

FredholmReport fredholm_report(const ModelContext& ctx, cplx beta,
                               const std::vector<cplx>& z_grid) {
  const cplx g = conj_point(beta);
  auto relative_sigma = [](const ComplexMatrix& k) {
    const double top = numcore::op_norm(k);
    return top > 0.0 ? numcore::sigma_min(k) / top : 0.0;
  };
  FredholmReport out;
  out.sigma_min_beta = relative_sigma(kernel_at(ctx, beta, beta));
  out.sigma_min_conj = relative_sigma(kernel_at(ctx, g, g));
  out.inv_beta = out.sigma_min_beta > kNormalizerFloor;
  out.inv_conj = out.sigma_min_conj > kNormalizerFloor;
  for (cplx z : z_grid) {
    const ComplexMatrix k = kernel_at(ctx, z, beta);
    const Index index = numcore::kernel_space(k).dim() - numcore::kernel_space(k.adjoint()).dim();
    out.index_zero = out.index_zero && index == 0;
  }
  return out;
}

}  // namespace fmodel::debranges
