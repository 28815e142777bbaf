#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fmodel {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

enum class ErrorKind {
  NotHermitian,
  IndefiniteInput,
  NotContraction,
  NotCnu,
  NotResolvent,
  SingularResolvent,
  DegenerateRegularity,
  DomainError,
  IllConditioned,
  DimensionMismatch,
  NotInHbeta,
  SingularNormalizer,
  BadBeta,
  ParseError,
  ShapeError,
  BadParam,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (and the verify harness) can branch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fmodel
