#pragma once

#include <optional>
#include <vector>

#include "fmodel/types.hpp"

namespace fmodel {

/// Relative numerical-rank factor. A singular value counts toward the rank
/// when it exceeds kRankTol * sigma_max * max(rows, cols).
inline constexpr double kRankTol = 1e-10;

/// Closed subspace of C^ambient_dim carried by an orthonormal column basis.
/// A zero-dimensional subspace has an ambient_dim x 0 basis.
class Subspace {
 public:
  Subspace(ComplexMatrix basis, double tol_rank = kRankTol);

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const noexcept { return basis_.rows(); }
  Index dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return basis_.cols() == 0; }
  const ComplexMatrix& basis() const noexcept { return basis_; }
  double tol_rank() const noexcept { return tol_rank_; }

  ComplexMatrix projector() const;
  Subspace orthogonal_complement() const;

 private:
  ComplexMatrix basis_;
  double tol_rank_;
};

namespace numcore {

/// Positive semidefinite square root of a Hermitian matrix. Eigenvalues in
/// [-tol*max(|M|,1), 0) are clipped to zero.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double tol = 1e-10);

/// (M)^{-1/2} for Hermitian positive definite M. Throws SingularNormalizer
/// when an eigenvalue falls below floor_rel * lambda_max (or is nonpositive).
ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& m, double floor_rel = 1e-12);

Subspace column_space(const ComplexMatrix& m, double tol_rank = kRankTol);
Subspace kernel_space(const ComplexMatrix& m, double tol_rank = kRankTol);
Index numerical_rank(const ComplexMatrix& m, double tol_rank = kRankTol);

struct MinNormSolution {
  ComplexMatrix x;
  double residual;
};

/// Minimum-norm least-squares solution of A x = b (b may have several columns).
MinNormSolution solve_min_norm(const ComplexMatrix& a, const ComplexMatrix& b,
                               double tol_rank = kRankTol);

struct SpectralMetrics {
  double op_norm;
  double sigma_min;
  std::vector<cplx> eigvals;          // empty for non-square input
  std::optional<double> min_herm_eig;  // set only when M is Hermitian
};

SpectralMetrics spectral_metrics(const ComplexMatrix& m, double herm_tol = 1e-12);

double op_norm(const ComplexMatrix& m);
double sigma_min(const ComplexMatrix& m);
std::vector<cplx> eigenvalues(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);

/// Greedy nearest-neighbour matching of two equally sized multisets; returns
/// the largest matched distance (infinity on size mismatch).
double multiset_distance(std::vector<cplx> lhs, std::vector<cplx> rhs);

/// Dimension of the intersection of two subspaces of the same ambient space.
Index intersection_dim(const Subspace& a, const Subspace& b);

ComplexMatrix identity(Index n);

}  // namespace numcore
}  // namespace fmodel
