#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "fmodel/types.hpp"
#include "oracle.hpp"

namespace testutil {

using fmodel::ComplexMatrix;
using fmodel::ComplexVector;
using fmodel::cplx;

inline oracle::Mat to_oracle(const ComplexMatrix& m) {
  oracle::Mat out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

inline ComplexMatrix from_oracle(const oracle::Mat& m) {
  ComplexMatrix out(static_cast<Eigen::Index>(m.r), static_cast<Eigen::Index>(m.c));
  for (std::size_t i = 0; i < m.r; ++i)
    for (std::size_t j = 0; j < m.c; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

inline ComplexMatrix fix1() { return ComplexMatrix::Zero(1, 1); }

inline ComplexMatrix fix2() {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 1) = 1.0;
  return t;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

inline ComplexVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  return random_matrix(rng, n, 1).col(0);
}

/// Random contraction with norm r, not unitary up to scaling.
inline ComplexMatrix random_contraction(std::mt19937_64& rng, Eigen::Index n, double r) {
  ComplexMatrix m = random_matrix(rng, n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return m * (r / svd.singularValues()(0));
}

template <class Fn>
std::optional<fmodel::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const fmodel::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
