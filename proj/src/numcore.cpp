#include "fmodel/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fmodel {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::IndefiniteInput: return "IndefiniteInput";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::NotCnu: return "NotCnu";
    case ErrorKind::NotResolvent: return "NotResolvent";
    case ErrorKind::SingularResolvent: return "SingularResolvent";
    case ErrorKind::DegenerateRegularity: return "DegenerateRegularity";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInHbeta: return "NotInHbeta";
    case ErrorKind::SingularNormalizer: return "SingularNormalizer";
    case ErrorKind::BadBeta: return "BadBeta";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::BadParam: return "BadParam";
  }
  return "Unknown";
}

Subspace::Subspace(ComplexMatrix basis, double tol_rank)
    : basis_(std::move(basis)), tol_rank_(tol_rank) {
  if (basis_.cols() > basis_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "subspace basis has more columns than rows");
  }
  if (basis_.cols() > 0) {
    const ComplexMatrix gram = basis_.adjoint() * basis_;
    const double err = (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).norm();
    if (!(err <= 1e-8)) {
      throw Error(ErrorKind::BadParam, "subspace basis is not orthonormal");
    }
  }
}

Subspace Subspace::zero(Index ambient_dim) { return Subspace(ComplexMatrix(ambient_dim, 0)); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ComplexMatrix::Identity(ambient_dim, ambient_dim));
}

ComplexMatrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Subspace Subspace::orthogonal_complement() const {
  if (basis_.cols() == 0) return full(ambient_dim());
  if (basis_.cols() == basis_.rows()) return zero(ambient_dim());
  // The trailing left singular vectors of an orthonormal basis span its complement.
  Eigen::JacobiSVD<ComplexMatrix> svd(basis_, Eigen::ComputeFullU);
  return Subspace(svd.matrixU().rightCols(ambient_dim() - dim()), tol_rank_);
}

namespace numcore {

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double sigma_min(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  // A wide matrix has a nontrivial kernel; report sigma_min over the domain.
  if (m.cols() > m.rows()) return 0.0;
  return s(s.size() - 1);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(m.norm(), 1.0);
  return (m - m.adjoint()).norm() <= tol * scale;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "hermitian_sqrt needs a square matrix");
  const double scale = std::max(op_norm(m), 1.0);
  if ((m - m.adjoint()).norm() > tol * scale) {
    throw Error(ErrorKind::NotHermitian, "input deviates from its adjoint");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
  Eigen::VectorXd lambda = eig.eigenvalues();
  if (lambda.size() > 0 && lambda(0) < -tol * scale) {
    throw Error(ErrorKind::IndefiniteInput, "minimum eigenvalue below -tol");
  }
  lambda = lambda.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& u = eig.eigenvectors();
  return u * lambda.cast<cplx>().asDiagonal() * u.adjoint();
}

ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& m, double floor_rel) {
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  if (lambda.size() == 0) return sym;
  const double top = lambda.cwiseAbs().maxCoeff();
  if (!(lambda(0) > floor_rel * top) || !(top > 0.0)) {
    throw Error(ErrorKind::SingularNormalizer, "eigenvalue below normalizer floor");
  }
  const Eigen::VectorXd inv = lambda.cwiseSqrt().cwiseInverse();
  const ComplexMatrix& u = eig.eigenvectors();
  return u * inv.cast<cplx>().asDiagonal() * u.adjoint();
}

namespace {

Index rank_from_singular_values(const Eigen::VectorXd& s, Index rows, Index cols, double tol_rank) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = tol_rank * s(0) * static_cast<double>(std::max(rows, cols));
  Index r = 0;
  while (r < s.size() && s(r) > threshold) ++r;
  return r;
}

}  // namespace

Index numerical_rank(const ComplexMatrix& m, double tol_rank) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return rank_from_singular_values(svd.singularValues(), m.rows(), m.cols(), tol_rank);
}

Subspace column_space(const ComplexMatrix& m, double tol_rank) {
  if (m.cols() == 0) return Subspace::zero(m.rows());
  Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const Index r = rank_from_singular_values(svd.singularValues(), m.rows(), m.cols(), tol_rank);
  return Subspace(svd.matrixU().leftCols(r), tol_rank);
}

Subspace kernel_space(const ComplexMatrix& m, double tol_rank) {
  if (m.rows() == 0) return Subspace::full(m.cols());
  Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Index r = rank_from_singular_values(svd.singularValues(), m.rows(), m.cols(), tol_rank);
  return Subspace(svd.matrixV().rightCols(m.cols() - r), tol_rank);
}

MinNormSolution solve_min_norm(const ComplexMatrix& a, const ComplexMatrix& b, double tol_rank) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_min_norm: row mismatch");
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const Index r = rank_from_singular_values(s, a.rows(), a.cols(), tol_rank);
  ComplexMatrix coeff = svd.matrixU().leftCols(r).adjoint() * b;
  for (Index i = 0; i < r; ++i) coeff.row(i) /= s(i);
  MinNormSolution out;
  out.x = svd.matrixV().leftCols(r) * coeff;
  const ComplexMatrix resid = a * out.x - b;
  out.residual = b.cols() == 1 ? resid.norm() : op_norm(resid);
  return out;
}

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "eigenvalues need a square matrix");
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(m, false);
  const auto& ev = eig.eigenvalues();
  return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

SpectralMetrics spectral_metrics(const ComplexMatrix& m, double herm_tol) {
  SpectralMetrics out{0.0, 0.0, {}, std::nullopt};
  if (m.size() == 0) return out;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  out.op_norm = s(0);
  out.sigma_min = m.cols() > m.rows() ? 0.0 : s(s.size() - 1);
  if (m.rows() == m.cols()) {
    out.eigvals = eigenvalues(m);
    if (is_hermitian(m, herm_tol)) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
      out.min_herm_eig = eig.eigenvalues()(0);
    }
  }
  return out;
}

double multiset_distance(std::vector<cplx> lhs, std::vector<cplx> rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  auto order = [](cplx x, cplx y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  std::sort(lhs.begin(), lhs.end(), order);
  std::vector<bool> used(rhs.size(), false);
  double worst = 0.0;
  for (const cplx& x : lhs) {
    std::size_t best = rhs.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - rhs[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

Index intersection_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "intersection of subspaces in different spaces");
  }
  if (a.is_zero() || b.is_zero()) return 0;
  ComplexMatrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  return a.dim() + b.dim() - numerical_rank(stacked, std::max(a.tol_rank(), b.tol_rank()));
}

}  // namespace numcore
}  // namespace fmodel
