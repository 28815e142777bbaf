#include "fmodel/crosscheck.hpp"

#include <cmath>

#include <Eigen/QR>

namespace fmodel::crosscheck {

namespace {

struct Raw {
  ComplexMatrix t, t_star, d_t, d_ts, id;
  cplx a;
};

Raw raw(const ModelContext& ctx) {
  const Contraction& c = ctx.contraction;
  return Raw{c.t(), c.t().adjoint(), c.d_t(), c.d_tstar(), numcore::identity(c.n()), ctx.a};
}

ComplexMatrix s_a(const Raw& r) {
  const ComplexMatrix left = (r.t_star - std::conj(r.a) * r.id).inverse();
  const ComplexMatrix w = r.d_t * (r.t - r.a * r.id).inverse() * left * r.d_t;
  return -left * r.d_t * numcore::hermitian_inv_sqrt(r.id + 0.5 * (w + w.adjoint()));
}

ComplexMatrix gamma(const ComplexMatrix& s) {
  const Index n = s.rows();
  const ComplexMatrix id = numcore::identity(n);
  ComplexMatrix g(2 * n, 2 * n);
  g.topLeftCorner(n, n) = s;
  g.topRightCorner(n, n) = numcore::hermitian_sqrt(id - s * s.adjoint());
  g.bottomLeftCorner(n, n) = numcore::hermitian_sqrt(id - s.adjoint() * s);
  g.bottomRightCorner(n, n) = -s.adjoint();
  return g;
}

ComplexMatrix theta(const Raw& r, cplx z) {
  return -r.t + z * r.d_ts * (r.id - z * r.t_star).inverse() * r.d_t;
}

ComplexMatrix f_gen(const Raw& r, cplx z) {
  ComplexMatrix f(2 * r.t.rows(), r.t.cols());
  f << r.t - z * r.id, r.d_t;
  return f;
}

}  // namespace

ComplexMatrix projector_py_via_ma(const ModelContext& ctx, cplx z) {
  const Raw r = raw(ctx);
  const ComplexMatrix fz = f_gen(r, z);
  const ComplexMatrix fa = f_gen(r, r.a);
  const ComplexMatrix along = fz * (fa.adjoint() * fz).inverse() * fa.adjoint();
  return numcore::identity(2 * r.t.rows()) - along;
}

double thm51_residual(const ModelContext& ctx, cplx z, const ComplexVector& f) {
  const Raw r = raw(ctx);
  const Index n = r.t.rows();
  const ComplexVector dtf = r.d_t * f;
  ComplexVector lhs_in = ComplexVector::Zero(2 * n);
  lhs_in.head(n) = theta(r, z) * dtf;
  ComplexVector rhs_in = ComplexVector::Zero(2 * n);
  rhs_in.tail(n) = dtf;
  const ComplexVector lhs = gamma(s_a(r)) * lhs_in;
  const ComplexVector rhs = projector_py_via_ma(ctx, z) * rhs_in;
  return (lhs - rhs).norm();
}

Eq54Residuals eq54_paper(const ModelContext& ctx, cplx z, const ComplexVector& f) {
  const Raw r = raw(ctx);
  const Index n = r.t.rows();
  const ComplexMatrix left = (r.t_star - std::conj(r.a) * r.id).inverse();
  const ComplexMatrix w = r.d_t * (r.t - r.a * r.id).inverse() * left * r.d_t;
  const ComplexMatrix pre = numcore::hermitian_inv_sqrt(r.id + 0.5 * (w + w.adjoint()));
  const ComplexVector h = pre * r.d_ts * (r.id - z * r.t_star).inverse() * (z * r.id - r.t) * f;
  ComplexVector target(2 * n);
  target << left * r.d_t * h, r.d_t * f - h;
  const ComplexMatrix fz = f_gen(r, z);
  const ComplexVector j = fz.colPivHouseholderQr().solve(target);
  Eq54Residuals out;
  out.first = ((r.t - z * r.id) * j - left * r.d_t * h).norm();
  out.second = (r.d_t * j + h - r.d_t * f).norm();
  return out;
}

double final_kernel_residual(const ModelContext& ctx, cplx z, cplx w) {
  const Raw r = raw(ctx);
  const Index n = r.t.rows();
  const ComplexMatrix g = gamma(s_a(r));
  const ComplexMatrix pz = projector_py_via_ma(ctx, z);
  const ComplexMatrix pw = projector_py_via_ma(ctx, w);
  const ComplexMatrix l = (g.adjoint() * pz * pw.adjoint() * g).topLeftCorner(n, n);
  const ComplexMatrix p_t = numcore::column_space(r.id - r.t_star * r.t).projector();
  const ComplexMatrix p_ts = numcore::column_space(r.id - r.t * r.t_star).projector();
  const ComplexMatrix diff = l - theta(r, z) * p_t * theta(r, w).adjoint();
  return numcore::op_norm(p_ts * diff * p_ts);
}

}  // namespace fmodel::crosscheck
