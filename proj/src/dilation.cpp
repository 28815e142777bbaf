#include "fmodel/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "fmodel/decomposition.hpp"
#include "fmodel/geometry.hpp"

namespace fmodel::dilation {

namespace {

ComplexMatrix stack(const ComplexMatrix& top, const ComplexMatrix& bottom) {
  ComplexMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

}  // namespace

DilationPair build(const Contraction& c) {
  const Index n = c.n();
  const ComplexMatrix& t = c.t();
  const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
  const ComplexMatrix id = numcore::identity(n);

  ComplexMatrix v0(2 * n, 2 * n);
  v0 << t, zero, c.d_t(), zero;
  ComplexMatrix vt(2 * n, 2 * n);
  vt << t, c.d_tstar(), c.d_t(), -t.adjoint();

  const Subspace numeric = numcore::kernel_space(v0);
  const bool full_rank = c.defect_t().dim() == n;
  DilationPair out{v0,
                   v0,
                   vt,
                   full_rank ? Subspace(stack(zero, id)) : numeric,
                   Subspace::zero(2 * n),
                   numcore::kernel_space(v0.adjoint()),
                   full_rank,
                   0.0};
  out.ker_v_perp = out.ker_v.orthogonal_complement();
  // The block structure says ker V = {0} (+) H; report how far the numerical
  // kernel is from it.
  out.ker_v_mismatch = geometry::gap(numeric, Subspace(stack(zero, id))).delta;
  return out;
}

double spectrum_union_residual(const DilationPair& d, const Contraction& c) {
  std::vector<cplx> rhs = numcore::eigenvalues(c.t());
  rhs.resize(rhs.size() + static_cast<std::size_t>(c.n()), cplx(0.0, 0.0));
  return numcore::multiset_distance(numcore::eigenvalues(d.v), std::move(rhs));
}

double regular_type_constant(const DilationPair& d, cplx a, double tol) {
  const double c_a = numcore::sigma_min(d.v - a * numcore::identity(d.v.rows()));
  if (!(c_a > tol)) {
    throw Error(ErrorKind::DegenerateRegularity, "V - aI is not bounded below");
  }
  return c_a;
}

ComplexMatrix cayley(const DilationPair& d, cplx z, cplx w, double tol) {
  const ComplexMatrix id = numcore::identity(d.v_tilde.rows());
  const ComplexMatrix shifted = d.v_tilde - z * id;
  if (!(numcore::sigma_min(shifted) > tol)) {
    throw Error(ErrorKind::SingularResolvent, "V~ - zI is not invertible");
  }
  return id + (z - w) * shifted.partialPivLu().inverse();
}

CayleyResiduals cayley_lemma_residuals(const DilationPair& d, const ModelContext& ctx, cplx z,
                                       cplx w) {
  const ComplexMatrix uzw = cayley(d, z, w);
  const ComplexMatrix uwz = cayley(d, w, z);
  CayleyResiduals out;
  out.inv = numcore::op_norm(uzw * uwz - numcore::identity(uzw.rows()));
  const Subspace mz = decomposition::subspace_m(ctx, z);
  const Subspace mw = decomposition::subspace_m(ctx, w);
  out.map_m = geometry::gap(numcore::column_space(uzw * mz.basis()), mw).delta;
  if (z != cplx(0.0) && w != cplx(0.0)) {
    const cplx zr = 1.0 / std::conj(z);
    const cplx wr = 1.0 / std::conj(w);
    const Subspace src = decomposition::subspace_m(ctx, wr).orthogonal_complement();
    const Subspace dst = decomposition::subspace_m(ctx, zr).orthogonal_complement();
    out.map_mperp = geometry::gap(numcore::column_space(uzw * src.basis()), dst).delta;
  }
  return out;
}

double julia_unitarity_residual(const DilationPair& d) {
  const ComplexMatrix id = numcore::identity(d.v_tilde.rows());
  return std::max(numcore::op_norm(d.v_tilde.adjoint() * d.v_tilde - id),
                  numcore::op_norm(d.v_tilde * d.v_tilde.adjoint() - id));
}

double extension_agreement_residual(const DilationPair& d) {
  if (d.ker_v_perp.is_zero()) return 0.0;
  return numcore::op_norm((d.v_tilde - d.v0) * d.ker_v_perp.basis());
}

double isometry_residual(const DilationPair& d, const ComplexMatrix& h_samples) {
  const Index n = d.v0.rows() / 2;
  double worst = 0.0;
  for (Index k = 0; k < h_samples.cols(); ++k) {
    const ComplexVector h = h_samples.col(k);
    const ComplexVector image = d.v0.leftCols(n) * h;
    worst = std::max(worst, std::abs(image.norm() - h.norm()));
  }
  return worst;
}

double ker_vstar_residual(const DilationPair& d, const Contraction& c) {
  const ComplexMatrix gen = stack(c.d_tstar(), -c.t().adjoint());
  return geometry::gap(d.ker_vstar, numcore::column_space(gen)).delta;
}

}  // namespace fmodel::dilation
