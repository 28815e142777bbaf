#include "fmodel/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace fmodel {

namespace {

struct DefectData {
  ComplexMatrix sqrt;
  ComplexMatrix basis;
};

// Square root and range basis of a defect Gramian G = I - X*X from one
// eigendecomposition. Eigenvalues at rounding level are treated as zero in
// both, so D and its basis always agree on the rank.
DefectData defect_from_gramian(const ComplexMatrix& gram) {
  const Index n = gram.rows();
  const double scale = std::max(numcore::op_norm(gram), 1.0);
  if ((gram - gram.adjoint()).norm() > 1e-10 * scale) {
    throw Error(ErrorKind::NotHermitian, "defect Gramian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (gram + gram.adjoint()));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const ComplexMatrix& u = eig.eigenvectors();
  const double floor = kRankTol * static_cast<double>(n) * scale;

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return lambda(i) > lambda(j); });

  Eigen::VectorXd root = Eigen::VectorXd::Zero(n);
  std::vector<Index> kept;
  for (Index i = 0; i < n; ++i) {
    if (lambda(i) > floor) {
      root(i) = std::sqrt(lambda(i));
    }
  }
  for (Index i : order) {
    if (lambda(i) > floor) kept.push_back(i);
  }

  DefectData out;
  out.sqrt = u * root.cast<cplx>().asDiagonal() * u.adjoint();
  out.basis.resize(n, static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    ComplexVector col = u.col(kept[k]);
    Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    col *= std::conj(col(arg)) / std::abs(col(arg));
    out.basis.col(static_cast<Index>(k)) = col;
  }
  return out;
}

void require_resolvent(const ComplexMatrix& m, double tol) {
  if (!(numcore::sigma_min(m) > tol)) {
    throw Error(ErrorKind::SingularResolvent, "I - zT* is not invertible");
  }
}

}  // namespace

Contraction Contraction::validate(const ComplexMatrix& t, double norm_tol) {
  if (t.rows() != t.cols() || t.rows() == 0) {
    throw Error(ErrorKind::ShapeError, "operator must be a nonempty square matrix");
  }
  if (!t.allFinite()) throw Error(ErrorKind::ParseError, "operator has non-finite entries");
  const double norm = numcore::op_norm(t);
  if (norm > 1.0 + norm_tol) {
    throw Error(ErrorKind::NotContraction, "operator norm exceeds 1");
  }
  const Index n = t.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  DefectData dt = defect_from_gramian(id - t.adjoint() * t);
  DefectData dts = defect_from_gramian(id - t * t.adjoint());
  Subspace st(std::move(dt.basis));
  Subspace sts(std::move(dts.basis));
  return Contraction(t, std::move(dt.sqrt), std::move(dts.sqrt), std::move(st), std::move(sts),
                     norm_tol);
}

namespace contraction {

CnuReport is_cnu(const Contraction& c, double tol) {
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(c.t());
  CnuReport report;
  for (Index i = 0; i < c.n(); ++i) {
    const cplx lambda = eig.eigenvalues()(i);
    if (std::abs(std::abs(lambda) - 1.0) <= tol) {
      ComplexVector v = eig.eigenvectors().col(i);
      v.normalize();
      report.unitary_eigenpairs.emplace_back(lambda, v);
    }
  }
  report.is_cnu = report.unitary_eigenpairs.empty();
  return report;
}

cplx boundary_resolvent(const Contraction& c, std::optional<cplx> preferred, double tol) {
  if (!is_cnu(c).is_cnu) throw Error(ErrorKind::NotCnu, "operator has a unimodular eigenvalue");
  const cplx a = preferred.value_or(cplx(1.0, 0.0));
  if (std::abs(std::abs(a) - 1.0) > 1e-12) {
    throw Error(ErrorKind::BadParam, "boundary point must lie on the unit circle");
  }
  const ComplexMatrix shifted = c.t() - a * numcore::identity(c.n());
  if (!(numcore::sigma_min(shifted) > tol)) {
    throw Error(ErrorKind::NotResolvent, "T - aI is not invertible");
  }
  return a;
}

ComplexMatrix char_function_full(const Contraction& c, cplx z, double tol) {
  const Index n = c.n();
  const ComplexMatrix resolvent_arg = numcore::identity(n) - z * c.t().adjoint();
  require_resolvent(resolvent_arg, tol);
  const ComplexMatrix inner = resolvent_arg.partialPivLu().solve(c.d_t());
  return -c.t() + z * c.d_tstar() * inner;
}

ComplexMatrix char_function(const Contraction& c, cplx z, double tol) {
  return c.defect_tstar().basis().adjoint() * char_function_full(c, z, tol) *
         c.defect_t().basis();
}

double char_identity_residual(const Contraction& c, cplx z, double tol) {
  const Index n = c.n();
  const ComplexMatrix id = numcore::identity(n);
  const ComplexMatrix resolvent_arg = id - z * c.t().adjoint();
  require_resolvent(resolvent_arg, tol);
  const ComplexMatrix rhs =
      c.d_tstar() * resolvent_arg.partialPivLu().solve(z * id - c.t());
  return numcore::op_norm(char_function_full(c, z, tol) * c.d_t() - rhs);
}

double defect_residual(const Contraction& c) {
  const ComplexMatrix id = numcore::identity(c.n());
  const ComplexMatrix& t = c.t();
  return std::max(numcore::op_norm(c.d_t() * c.d_t() - (id - t.adjoint() * t)),
                  numcore::op_norm(c.d_tstar() * c.d_tstar() - (id - t * t.adjoint())));
}

double intertwining_residual(const Contraction& c) {
  return numcore::op_norm(c.d_t() * c.t().adjoint() - c.t().adjoint() * c.d_tstar());
}

}  // namespace contraction
}  // namespace fmodel
