#include "fmodel/model.hpp"

#include <algorithm>
#include <cmath>

namespace fmodel::model {

namespace {

ComplexVector embed_h(const ComplexVector& f) {
  ComplexVector out = ComplexVector::Zero(2 * f.size());
  out.head(f.size()) = f;
  return out;
}

}  // namespace

ComplexMatrix evaluation_row(const ModelContext& ctx, cplx z) {
  return ctx.y.basis().adjoint() * decomposition::projector_py(ctx, z).p_y;
}

ComplexVector psi_eval(const ModelContext& ctx, const ComplexVector& f, cplx z) {
  return evaluation_row(ctx, z) * f;
}

KernelMatrix kernel(const ModelContext& ctx, cplx z, cplx w) {
  const ComplexMatrix xz = evaluation_row(ctx, z);
  const ComplexMatrix xw = z == w ? xz : evaluation_row(ctx, w);
  return KernelMatrix{z, w, xz * xw.adjoint()};
}

ComplexMatrix kernel_gram(const ModelContext& ctx, const std::vector<cplx>& points) {
  const Index n = ctx.n();
  const auto m = static_cast<Index>(points.size());
  ComplexMatrix rows(n * m, 2 * n);
  for (Index i = 0; i < m; ++i) rows.middleRows(i * n, n) = evaluation_row(ctx, points[i]);
  return rows * rows.adjoint();
}

double intertwine_residual(const ModelContext& ctx, cplx z, const ComplexVector& f) {
  const ComplexMatrix p = decomposition::projector_py(ctx, z).p_y;
  const ComplexVector h = embed_h(f);
  return (p * (ctx.dilation.v0 * h) - z * (p * h)).norm();
}

double intertwine_residual(const ModelContext& ctx, const PYEvaluation& eval) {
  const Index n = ctx.n();
  const ComplexMatrix left = eval.p_y * ctx.dilation.v0.leftCols(n);
  return numcore::op_norm(left - eval.z * eval.p_y.leftCols(n));
}

ComplexVector apply_r(const ModelContext& ctx, cplx z, const ComplexVector& f) {
  return embed_h(decomposition::decompose(ctx, z, f).g);
}

double difference_quotient_residual(const ModelContext& ctx, cplx z, const ComplexVector& f,
                                    const std::vector<cplx>& aux) {
  const ComplexVector rf = apply_r(ctx, z, f);
  const ComplexVector fz = psi_eval(ctx, f, z);
  double worst = 0.0;
  for (cplx w : aux) {
    const ComplexMatrix xw = evaluation_row(ctx, w);
    const ComplexVector quotient = (xw * f - fz) / (w - z);
    worst = std::max(worst, (quotient - xw * rf).norm());
  }
  return worst;
}

SBetaResult s_beta(const ModelContext& ctx, cplx beta, const ComplexVector& f) {
  if (beta == cplx(0.0) || !(std::abs(beta) < 1.0)) {
    throw Error(ErrorKind::DomainError, "beta must lie in the punctured unit disc");
  }
  const cplx target = 1.0 / std::conj(beta);
  if (!decomposition::in_omega(ctx, target)) {
    throw Error(ErrorKind::DomainError, "1/conj(beta) outside Omega_a");
  }
  const decomposition::Solver solver(ctx, beta);
  const double fnorm = f.norm();
  if ((solver.evaluation().p_y * f).norm() > kHbetaTol * fnorm) {
    throw Error(ErrorKind::NotInHbeta, "vector is not annihilated by P_Y(beta)");
  }
  const double scale = 1.0 - std::norm(beta);
  SBetaResult out;
  out.sf = -std::conj(beta) * f + scale * embed_h(solver.solve(f).g);
  out.isometry_residual = std::abs(out.sf.norm() - fnorm);
  out.vanish_residual = (decomposition::projector_py(ctx, target).p_y * out.sf).norm();
  return out;
}

InjectivityReport injectivity_check(const ModelContext& ctx, const std::vector<cplx>& samples) {
  const Index dim = 2 * ctx.n();
  InjectivityReport out;
  out.sufficient = samples.size() >= 2;
  if (samples.empty()) {
    out.combined_kernel_dim = dim;
    return out;
  }
  // x lies in every M_z iff it is annihilated by every (M_z^perp)*.
  std::vector<ComplexMatrix> blocks;
  Index rows = 0;
  for (cplx z : samples) {
    blocks.push_back(decomposition::subspace_m(ctx, z).orthogonal_complement().basis().adjoint());
    rows += blocks.back().rows();
  }
  ComplexMatrix stacked(rows, dim);
  Index at = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  out.combined_kernel_dim = rows == 0 ? dim : dim - numcore::numerical_rank(stacked);
  return out;
}

CompressionReport compression_check(const ModelContext& ctx, const std::vector<cplx>& samples) {
  const Index n = ctx.n();
  CompressionReport out;
  out.block_residual = numcore::op_norm(ctx.dilation.v0.topLeftCorner(n, n) - ctx.contraction.t());

  // Evaluate u_k = Psi(e_k, 0) and z u_k at the samples, recover the source of
  // z u_k by a stacked least-squares solve, then project onto H (+) {0}.
  const auto m = static_cast<Index>(samples.size());
  ComplexMatrix eval(n * m, 2 * n);
  ComplexMatrix shifted(n * m, n);
  for (Index i = 0; i < m; ++i) {
    const ComplexMatrix row = evaluation_row(ctx, samples[i]);
    eval.middleRows(i * n, n) = row;
    shifted.middleRows(i * n, n) = samples[i] * row.leftCols(n);
  }
  const ComplexMatrix source = numcore::solve_min_norm(eval, shifted).x;
  out.model_residual = numcore::op_norm(source.topRows(n) - ctx.contraction.t());
  return out;
}

double frame_inner_product_residual(const ModelContext& ctx, const std::vector<cplx>& points,
                                    const ComplexMatrix& c, const ComplexMatrix& d) {
  const Index n = ctx.n();
  const auto m = static_cast<Index>(points.size());
  if (c.rows() != n || d.rows() != n || c.cols() != m || d.cols() != m) {
    throw Error(ErrorKind::DimensionMismatch, "frame coefficients must be n x points");
  }
  std::vector<ComplexMatrix> rows;
  rows.reserve(points.size());
  for (cplx p : points) rows.push_back(evaluation_row(ctx, p));
  ComplexVector f = ComplexVector::Zero(2 * n);
  ComplexVector g = ComplexVector::Zero(2 * n);
  for (Index i = 0; i < m; ++i) {
    f += rows[i].adjoint() * c.col(i);
    g += rows[i].adjoint() * d.col(i);
  }
  cplx quadrature(0.0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const ComplexMatrix k = rows[j] * rows[i].adjoint();  // K_{w_i}(w_j)
      quadrature += d.col(j).dot(k * c.col(i));
    }
  }
  return std::abs(g.dot(f) - quadrature);
}

}  // namespace fmodel::model
