#include "fmodel/coincidence.hpp"

#include <algorithm>
#include <cmath>

namespace fmodel::coincidence {

namespace {

constexpr double kResolventTol = 1e-10;

Eigen::PartialPivLU<ComplexMatrix> checked_lu(const ComplexMatrix& m) {
  if (!(numcore::sigma_min(m) > kResolventTol)) {
    throw Error(ErrorKind::SingularResolvent, "resolvent operator is not invertible");
  }
  return m.partialPivLu();
}

ComplexMatrix julia(const ComplexMatrix& s) {
  const Index n = s.rows();
  const ComplexMatrix id = numcore::identity(n);
  ComplexMatrix out(2 * n, 2 * n);
  out << s, numcore::hermitian_sqrt(id - s * s.adjoint()), numcore::hermitian_sqrt(id - s.adjoint() * s),
      -s.adjoint();
  return out;
}

void require_disc(cplx z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::DomainError, "point outside the open unit disc");
}

}  // namespace

CoincidenceContext build(const ModelContext& ctx) {
  const Index n = ctx.n();
  const ComplexMatrix& t = ctx.contraction.t();
  const ComplexMatrix& d_t = ctx.contraction.d_t();
  const ComplexMatrix id = numcore::identity(n);
  const auto lu_t = checked_lu(t - ctx.a * id);
  const auto lu_ts = checked_lu(t.adjoint() - std::conj(ctx.a) * id);

  CoincidenceContext cc{ctx, {}, {}, {}, {}, 0.0};
  cc.w = d_t * lu_t.solve(lu_ts.solve(d_t));
  cc.w = 0.5 * (cc.w + cc.w.adjoint());
  const ComplexMatrix inv_sqrt = numcore::hermitian_inv_sqrt(id + cc.w);
  cc.s_a = -lu_ts.solve(d_t) * inv_sqrt;
  cc.defect_identity_residual = numcore::op_norm((id - cc.s_a.adjoint() * cc.s_a) -
                                                 (id + cc.w).partialPivLu().inverse());
  if (!(cc.defect_identity_residual <= kDefectIdentityTol)) {
    throw Error(ErrorKind::IllConditioned, "defect identity for S_a fails");
  }
  cc.gamma_a = julia(cc.s_a);
  cc.j_swap = ComplexMatrix::Zero(2 * n, 2 * n);
  cc.j_swap.topRightCorner(n, n) = id;
  cc.j_swap.bottomLeftCorner(n, n) = id;
  return cc;
}

ComplexVector h_vector(const CoincidenceContext& cc, cplx z, const ComplexVector& f) {
  const Contraction& c = cc.ctx.contraction;
  const ComplexMatrix id = numcore::identity(c.n());
  const ComplexVector inner = checked_lu(id - z * c.t().adjoint()).solve((z * id - c.t()) * f);
  return numcore::hermitian_inv_sqrt(id + cc.w) * (c.d_tstar() * inner);
}

ComplexVector j_vector(const CoincidenceContext& cc, JVariant variant, cplx z,
                       const ComplexVector& f) {
  const Contraction& c = cc.ctx.contraction;
  const ComplexMatrix& t = c.t();
  const ComplexMatrix& d_t = c.d_t();
  const ComplexMatrix id = numcore::identity(c.n());
  const cplx a_bar = std::conj(cc.ctx.a);
  if (variant == JVariant::oblique) {
    const ComplexMatrix m = id + a_bar * z * id - a_bar * t - z * t.adjoint();
    return checked_lu(m).solve(d_t * (d_t * f));
  }
  const ComplexVector h = h_vector(cc, z, f);
  const ComplexMatrix gram = (1.0 + std::norm(z)) * id - z * t.adjoint() - std::conj(z) * t;
  const ComplexVector yh = checked_lu(t.adjoint() - a_bar * id).solve(d_t * h);
  const ComplexVector rhs = (t.adjoint() - std::conj(z) * id) * yh + d_t * (d_t * f - h);
  return checked_lu(gram).solve(rhs);
}

Eq54Residuals eq54_residuals(const CoincidenceContext& cc, JVariant variant, cplx z,
                             const ComplexVector& f) {
  const Contraction& c = cc.ctx.contraction;
  const ComplexMatrix& t = c.t();
  const ComplexMatrix& d_t = c.d_t();
  const ComplexMatrix id = numcore::identity(c.n());
  const ComplexVector j = j_vector(cc, variant, z, f);
  const ComplexVector h = variant == JVariant::paper ? h_vector(cc, z, f) : ComplexVector(d_t * (f - j));
  const ComplexVector yh = checked_lu(t.adjoint() - std::conj(cc.ctx.a) * id).solve(d_t * h);
  Eq54Residuals out;
  // [0; D_T f] = [(T - z) j; D_T j] + [-(T* - conj a)^{-1} D_T h; h]
  out.first = ((t - z * id) * j - yh).norm();
  out.second = (d_t * j + h - d_t * f).norm();
  return out;
}

CoincidenceSample coincidence_residual(const CoincidenceContext& cc, cplx z,
                                       const ComplexVector& f) {
  require_disc(z);
  const Contraction& c = cc.ctx.contraction;
  const Index n = c.n();
  const ComplexVector dtf = c.d_t() * f;
  ComplexVector top = ComplexVector::Zero(2 * n);
  top.head(n) = contraction::char_function_full(c, z) * dtf;
  ComplexVector stacked = ComplexVector::Zero(2 * n);
  stacked.head(n) = dtf;

  CoincidenceSample out;
  out.z = z;
  out.f = f;
  out.lhs = cc.gamma_a * top;
  out.rhs = decomposition::projector_py(cc.ctx, z).p_y * (cc.j_swap * stacked);
  out.residual = (out.lhs - out.rhs).norm();
  return out;
}

FzGramReport fz_gram_check(const CoincidenceContext& cc, cplx z) {
  const ComplexMatrix& t = cc.ctx.contraction.t();
  const ComplexMatrix fz = decomposition::m_generator(cc.ctx, z);
  const ComplexMatrix gram = fz.adjoint() * fz;
  const ComplexMatrix closed = (1.0 + std::norm(z)) * numcore::identity(t.rows()) -
                               std::conj(z) * t - z * t.adjoint();
  FzGramReport out;
  out.gram_residual = numcore::op_norm(gram - closed);
  const double bound = (1.0 - std::abs(z)) * (1.0 - std::abs(z));
  out.lower_bound_ok = numcore::sigma_min(gram) >= bound - 1e-12 * std::max(1.0, bound);
  return out;
}

FinalKernelReport final_kernel_identity(const CoincidenceContext& cc, cplx z, cplx w) {
  require_disc(z);
  require_disc(w);
  const Contraction& c = cc.ctx.contraction;
  const Index n = c.n();
  const ComplexMatrix& q = c.defect_tstar().basis();
  ComplexMatrix embed = ComplexMatrix::Zero(2 * n, q.cols());
  embed.topRows(n) = q;
  const ComplexMatrix pz = decomposition::projector_py(cc.ctx, z).p_y;
  const ComplexMatrix pw = z == w ? pz : decomposition::projector_py(cc.ctx, w).p_y;

  FinalKernelReport out;
  out.lhs = embed.adjoint() * cc.gamma_a.adjoint() * pz * pw.adjoint() * cc.gamma_a * embed;
  const ComplexMatrix tz = contraction::char_function(c, z);
  const ComplexMatrix tw = z == w ? tz : contraction::char_function(c, w);
  out.rhs = tz * tw.adjoint();
  out.residual = numcore::op_norm(out.lhs - out.rhs);
  return out;
}

double final_kernel_identity_residual(const CoincidenceContext& cc, cplx z, cplx w) {
  return final_kernel_identity(cc, z, w).residual;
}

double gamma_unitarity_residual(const CoincidenceContext& cc) {
  const ComplexMatrix id = numcore::identity(cc.gamma_a.rows());
  return std::max(numcore::op_norm(cc.gamma_a.adjoint() * cc.gamma_a - id),
                  numcore::op_norm(cc.gamma_a * cc.gamma_a.adjoint() - id));
}

}  // namespace fmodel::coincidence
