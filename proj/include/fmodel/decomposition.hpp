#pragma once

#include "fmodel/dilation.hpp"

namespace fmodel {

/// Points with ||z| - 1| <= kTolCircle count as lying on the unit circle.
inline constexpr double kTolCircle = 1e-9;
/// Stacked systems with a larger 2-norm condition number are rejected.
inline constexpr double kMaxCond = 1e12;

/// Configured model session: H (+) H = M_z (+) Y with Y = M_a^perp.
struct ModelContext {
  Contraction contraction;
  cplx a;
  double c_a;
  double epsilon;  // c_a / 3
  Subspace y;
  DilationPair dilation;

  Index n() const noexcept { return contraction.n(); }
};

struct Decomposition {
  ComplexVector g;  // component in H, (V0 - zI)(g, 0)
  ComplexVector y;  // coordinates in the Y basis
  double residual;
};

/// P_Y(z) together with the two halves of the inverse of [F_z | Y].
struct PYEvaluation {
  cplx z;
  ComplexMatrix p_y;       // 2n x 2n
  ComplexMatrix g_solver;  // n x 2n, f -> g
  ComplexMatrix y_solver;  // n x 2n, f -> Y coordinates
  double solve_residual;
  double cond_estimate;
};

struct StrausExtension {
  ComplexMatrix u_a;
  double isometry_residual;
  Index domain_dim;
  Index range_dim;
  double step1_sin_angle;  // sine of the minimal angle between (ker V)^perp and Y
};

namespace decomposition {

ModelContext make_context(const Contraction& c, cplx a);

bool in_omega(const ModelContext& ctx, cplx z);

/// F_z = [T - zI; D_T], whose column space is M_z.
ComplexMatrix m_generator(const ModelContext& ctx, cplx z);
Subspace subspace_m(const ModelContext& ctx, cplx z);

/// One factorization of [F_z | Y] reused for any number of right-hand sides.
class Solver {
 public:
  Solver(const ModelContext& ctx, cplx z);

  Decomposition solve(const ComplexVector& f) const;
  const PYEvaluation& evaluation() const noexcept { return eval_; }

 private:
  const ModelContext* ctx_;
  ComplexMatrix f_z_;
  PYEvaluation eval_;
};

Decomposition decompose(const ModelContext& ctx, cplx z, const ComplexVector& f);
PYEvaluation projector_py(const ModelContext& ctx, cplx z);

StrausExtension straus_extension(const ModelContext& ctx);

/// Largest |z - a| along the unit circle (both directions, minimum taken) up
/// to which [F_z | Y] stays within kMaxCond. Bisection; no optimality claim.
double empirical_arc_radius(const ModelContext& ctx, int iterations = 60);

}  // namespace decomposition
}  // namespace fmodel
