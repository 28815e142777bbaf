#pragma once

// Reference implementations for the tests. Deliberately naive: plain
// row-major storage, Gauss-Jordan inversion and a cyclic complex Jacobi
// eigensolver. Nothing here touches Eigen or the library.

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Mat {
  std::size_t r = 0, c = 0;
  std::vector<cd> a;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r(rows), c(cols), a(rows * cols) {}
  cd& operator()(std::size_t i, std::size_t j) { return a[i * c + j]; }
  cd operator()(std::size_t i, std::size_t j) const { return a[i * c + j]; }
};

Mat eye(std::size_t n);
Mat zeros(std::size_t r, std::size_t c);
Mat adj(const Mat& m);
Mat mul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat scale(cd s, const Mat& m);
Mat inv(const Mat& m);  // Gauss-Jordan with partial pivoting
Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
Mat block(const Mat& m, std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols);
double frob(const Mat& m);

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.
struct HermEig {
  std::vector<double> values;
  Mat vectors;
};
HermEig herm_eig(const Mat& h);

Mat herm_sqrt(const Mat& h);      // negatives clipped to 0
Mat herm_inv_sqrt(const Mat& h);
double op_norm(const Mat& m);
double sigma_min(const Mat& m);   // smallest singular value of a tall or square matrix
/// Orthogonal projector onto the span of the eigenvectors of h with eigenvalue > tol.
Mat range_projector_psd(const Mat& h, double tol);
/// Orthogonal projector onto the column space of g (full column rank assumed).
Mat col_projector(const Mat& g);

// Functional-model quantities for an operator T and boundary point a.
struct Model {
  Mat t, ts, d_t, d_ts, id;
  cd a;
  std::size_t n;
};
Model make_model(const Mat& t, cd a);

Mat f_gen(const Model& m, cd z);    // [T - z; D_T]
Mat py(const Model& m, cd z);       // projector onto M_a^perp along M_z
Mat theta(const Model& m, cd z);    // -T + z D_{T*}(I - zT*)^{-1} D_T
Mat julia_v(const Model& m);
Mat cayley(const Model& m, cd z, cd w);
double c_a(const Model& m);
Mat s_a(const Model& m);
Mat gamma_a(const Model& m);
Mat h_vec(const Model& m, cd z, const Mat& f);
Mat j_paper(const Model& m, cd z, const Mat& f);
Mat j_oblique(const Model& m, cd z, const Mat& f);

double thm51_residual(const Model& m, cd z, const Mat& f);
double eq54_paper_first(const Model& m, cd z, const Mat& f);
double eq54_paper_second(const Model& m, cd z, const Mat& f);
double final_kernel_residual(const Model& m, cd z, cd w);
/// delta(M_a^perp, M_z^perp) from projectors.
double gap_ma_mz(const Model& m, cd z);

}  // namespace oracle
