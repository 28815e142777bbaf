#include <cmath>
#include <random>

#include <Eigen/QR>

#include "fmodel/operator_io.hpp"

namespace fmodel::fixtures {

FixtureKind parse_kind(const std::string& name) {
  if (name == "zero") return FixtureKind::zero;
  if (name == "jordan") return FixtureKind::jordan;
  if (name == "scaled_unitary") return FixtureKind::scaled_unitary;
  if (name == "diagonal") return FixtureKind::diagonal;
  throw Error(ErrorKind::BadParam, "unknown fixture kind '" + name + "'");
}

ComplexMatrix generate(FixtureKind kind, Index dim, std::uint64_t seed, double r) {
  if (dim < 1) throw Error(ErrorKind::BadParam, "dim must be at least 1");
  const bool needs_r = kind == FixtureKind::scaled_unitary || kind == FixtureKind::diagonal;
  if (needs_r && !(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadParam, "r must lie in (0, 1)");

  std::mt19937_64 rng(seed);
  switch (kind) {
    case FixtureKind::zero:
      return ComplexMatrix::Zero(dim, dim);
    case FixtureKind::jordan: {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      for (Index i = 0; i + 1 < dim; ++i) m(i, i + 1) = 1.0;
      return m;
    }
    case FixtureKind::scaled_unitary: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      ComplexMatrix g(dim, dim);
      for (Index j = 0; j < dim; ++j)
        for (Index i = 0; i < dim; ++i) g(i, j) = cplx(gauss(rng), gauss(rng));
      Eigen::HouseholderQR<ComplexMatrix> qr(g);
      ComplexMatrix q = qr.householderQ();
      // Phase fix so that Q is Haar distributed and independent of LAPACK sign conventions.
      for (Index j = 0; j < dim; ++j) {
        const cplx d = qr.matrixQR()(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
      }
      return r * q;
    }
    case FixtureKind::diagonal: {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double two_pi = 2.0 * std::acos(-1.0);
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      for (Index i = 0; i < dim; ++i) {
        const double mod = r * unit(rng);
        m(i, i) = std::polar(mod, two_pi * unit(rng));
      }
      return m;
    }
  }
  throw Error(ErrorKind::BadParam, "unknown fixture kind");
}

}  // namespace fmodel::fixtures
