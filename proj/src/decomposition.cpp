#include "fmodel/decomposition.hpp"

#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "fmodel/geometry.hpp"

namespace fmodel::decomposition {

namespace {

// Orthonormal basis of Y from the parametrization (-(T* - a~)^{-1} D_T h, h),
// via QR with a real positive diagonal in R.
Subspace build_y(const Contraction& c, cplx a) {
  const Index n = c.n();
  const ComplexMatrix shifted = c.t().adjoint() - std::conj(a) * numcore::identity(n);
  ComplexMatrix gen(2 * n, n);
  gen.topRows(n) = -shifted.partialPivLu().solve(c.d_t());
  gen.bottomRows(n) = numcore::identity(n);
  Eigen::HouseholderQR<ComplexMatrix> qr(gen);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(2 * n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return Subspace(std::move(q));
}

double cond_of(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

}  // namespace

ModelContext make_context(const Contraction& c, cplx a) {
  if (!(std::abs(std::abs(a) - 1.0) <= kTolCircle)) {
    throw Error(ErrorKind::BadParam, "boundary point a must lie on the unit circle");
  }
  DilationPair d = dilation::build(c);
  const double c_a = dilation::regular_type_constant(d, a);
  Subspace y = build_y(c, a);
  return ModelContext{c, a, c_a, c_a / 3.0, std::move(y), std::move(d)};
}

bool in_omega(const ModelContext& ctx, cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return std::abs(std::abs(z) - 1.0) > kTolCircle || std::abs(z - ctx.a) < ctx.epsilon;
}

ComplexMatrix m_generator(const ModelContext& ctx, cplx z) {
  const Index n = ctx.n();
  ComplexMatrix f(2 * n, n);
  f.topRows(n) = ctx.contraction.t() - z * numcore::identity(n);
  f.bottomRows(n) = ctx.contraction.d_t();
  return f;
}

Subspace subspace_m(const ModelContext& ctx, cplx z) {
  return numcore::column_space(m_generator(ctx, z));
}

Solver::Solver(const ModelContext& ctx, cplx z) : ctx_(&ctx), f_z_(m_generator(ctx, z)) {
  if (!in_omega(ctx, z)) throw Error(ErrorKind::DomainError, "point outside Omega_a");
  const Index n = ctx.n();
  ComplexMatrix stacked(2 * n, 2 * n);
  stacked << f_z_, ctx.y.basis();

  Eigen::BDCSVD<ComplexMatrix> svd(stacked, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  const double cond = lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxCond)) {
    throw Error(ErrorKind::IllConditioned, "decomposition system is ill-conditioned");
  }
  const ComplexMatrix inv =
      svd.matrixV() * s.cwiseInverse().cast<cplx>().asDiagonal() * svd.matrixU().adjoint();

  eval_.z = z;
  eval_.g_solver = inv.topRows(n);
  eval_.y_solver = inv.bottomRows(n);
  eval_.p_y = ctx.y.basis() * eval_.y_solver;
  eval_.solve_residual = numcore::op_norm(stacked * inv - numcore::identity(2 * n));
  eval_.cond_estimate = cond;
}

Decomposition Solver::solve(const ComplexVector& f) const {
  if (f.size() != f_z_.rows()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Decomposition out;
  out.g = eval_.g_solver * f;
  out.y = eval_.y_solver * f;
  out.residual = (f - f_z_ * out.g - ctx_->y.basis() * out.y).norm();
  return out;
}

Decomposition decompose(const ModelContext& ctx, cplx z, const ComplexVector& f) {
  return Solver(ctx, z).solve(f);
}

PYEvaluation projector_py(const ModelContext& ctx, cplx z) { return Solver(ctx, z).evaluation(); }

StrausExtension straus_extension(const ModelContext& ctx) {
  const Index n = ctx.n();
  const Subspace& kperp = ctx.dilation.ker_v_perp;
  ComplexMatrix domain(2 * n, kperp.dim() + ctx.y.dim());
  domain << kperp.basis(), ctx.y.basis();
  ComplexMatrix image(2 * n, domain.cols());
  image << ctx.dilation.v0 * kperp.basis(), ctx.a * ctx.y.basis();

  StrausExtension out;
  out.domain_dim = numcore::numerical_rank(domain);
  out.range_dim = numcore::numerical_rank(image);
  out.u_a = domain.rows() == domain.cols()
                ? ComplexMatrix(domain.transpose().partialPivLu().solve(image.transpose()).transpose())
                : numcore::solve_min_norm(domain.adjoint(), image.adjoint()).x.adjoint();
  out.isometry_residual =
      numcore::op_norm(out.u_a.adjoint() * out.u_a - numcore::identity(2 * n));
  const auto angle = geometry::gap(kperp, ctx.y).angle;
  out.step1_sin_angle = angle ? std::sin(*angle) : 0.0;
  return out;
}

double empirical_arc_radius(const ModelContext& ctx, int iterations) {
  const Index n = ctx.n();
  auto good = [&](double theta, double sign) {
    const cplx z = ctx.a * std::polar(1.0, sign * theta);
    ComplexMatrix stacked(2 * n, 2 * n);
    stacked << m_generator(ctx, z), ctx.y.basis();
    return cond_of(stacked) <= kMaxCond;
  };
  const double pi = std::acos(-1.0);
  double worst = 2.0;
  for (double sign : {1.0, -1.0}) {
    if (good(pi, sign)) continue;
    double lo = 0.0;
    double hi = pi;
    for (int it = 0; it < iterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      (good(mid, sign) ? lo : hi) = mid;
    }
    worst = std::min(worst, 2.0 * std::sin(0.5 * lo));
  }
  return worst;
}

}  // namespace fmodel::decomposition
