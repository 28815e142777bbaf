#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fmodel/numcore.hpp"

namespace fmodel {

/// A validated contraction T with its defect operators and defect spaces.
///
/// Defect bases are eigenvectors of I - T*T (resp. I - TT*) ordered by
/// descending defect value, ties kept in solver order, each column rotated so
/// its largest-modulus entry is real and positive.
class Contraction {
 public:
  static Contraction validate(const ComplexMatrix& t, double norm_tol = 1e-8);

  const ComplexMatrix& t() const noexcept { return t_; }
  Index n() const noexcept { return t_.rows(); }
  const ComplexMatrix& d_t() const noexcept { return d_t_; }
  const ComplexMatrix& d_tstar() const noexcept { return d_tstar_; }
  const Subspace& defect_t() const noexcept { return defect_t_; }
  const Subspace& defect_tstar() const noexcept { return defect_tstar_; }
  double norm_tol() const noexcept { return norm_tol_; }

 private:
  Contraction(ComplexMatrix t, ComplexMatrix d_t, ComplexMatrix d_tstar, Subspace defect_t,
              Subspace defect_tstar, double norm_tol)
      : t_(std::move(t)),
        d_t_(std::move(d_t)),
        d_tstar_(std::move(d_tstar)),
        defect_t_(std::move(defect_t)),
        defect_tstar_(std::move(defect_tstar)),
        norm_tol_(norm_tol) {}

  ComplexMatrix t_;
  ComplexMatrix d_t_;
  ComplexMatrix d_tstar_;
  Subspace defect_t_;
  Subspace defect_tstar_;
  double norm_tol_;
};

struct CnuReport {
  bool is_cnu = true;
  std::vector<std::pair<cplx, ComplexVector>> unitary_eigenpairs;
};

namespace contraction {

CnuReport is_cnu(const Contraction& c, double tol = 1e-8);

/// A unimodular point of the resolvent set: `preferred` if given, else 1.
cplx boundary_resolvent(const Contraction& c, std::optional<cplx> preferred = std::nullopt,
                        double tol = 1e-10);

/// Characteristic function as a matrix from the defect_t basis to the
/// defect_tstar basis.
ComplexMatrix char_function(const Contraction& c, cplx z, double tol = 1e-10);

/// -T + z D_{T*} (I - zT*)^{-1} D_T as an n x n matrix on H.
ComplexMatrix char_function_full(const Contraction& c, cplx z, double tol = 1e-10);

/// |Theta(z) D_T - D_{T*} (I - zT*)^{-1} (zI - T)|.
double char_identity_residual(const Contraction& c, cplx z, double tol = 1e-10);

/// max(|D_T^2 - (I - T*T)|, |D_{T*}^2 - (I - TT*)|).
double defect_residual(const Contraction& c);

/// |D_T T* - T* D_{T*}|.
double intertwining_residual(const Contraction& c);

}  // namespace contraction
}  // namespace fmodel
