#include "fmodel/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fmodel::geometry {

namespace {

// |(I - P_A) P_B| for orthonormal bases, computed as |B - A(A*B)|.
double directed(const Subspace& a, const Subspace& b) {
  if (b.is_zero()) return 0.0;
  if (a.is_zero()) return 1.0;
  const ComplexMatrix resid = b.basis() - a.basis() * (a.basis().adjoint() * b.basis());
  return std::min(1.0, numcore::op_norm(resid));
}

// sqrt(2 - 2 sqrt(1 - t^2)) rewritten to avoid cancellation for small t.
double sphere_distance(double t) { return t * std::sqrt(2.0 / (1.0 + std::sqrt(1.0 - t * t))); }

}  // namespace

GapReport gap(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "gap between subspaces of different spaces");
  }
  GapReport out;
  if (a.is_zero() && b.is_zero()) return out;
  out.delta = std::max(directed(a, b), directed(b, a));
  out.delta_tilde = sphere_distance(out.delta);
  if (!a.is_zero() && !b.is_zero()) {
    const double c = std::min(1.0, numcore::op_norm(a.basis().adjoint() * b.basis()));
    out.angle = std::atan2(sin_min_angle(a, b), c);
  }
  return out;
}

double sin_min_angle(const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorKind::BadParam, "minimal angle needs nonzero subspaces");
  }
  // Use the smaller subspace as the probe so the residual matrix is tall.
  const Subspace& probe = a.dim() <= b.dim() ? a : b;
  const Subspace& other = a.dim() <= b.dim() ? b : a;
  const ComplexMatrix resid =
      probe.basis() - other.basis() * (other.basis().adjoint() * probe.basis());
  return std::min(1.0, numcore::sigma_min(resid));
}

Lemma1Report lemma1_check(const Subspace& a, const Subspace& b) {
  Lemma1Report out;
  out.intersection_dim = numcore::intersection_dim(a, b);
  out.trivial_intersection = out.intersection_dim == 0;
  out.closed_sum = true;
  out.angle_positive = !a.is_zero() && !b.is_zero() && sin_min_angle(a, b) > kAngleTol;
  if (a.is_zero() || b.is_zero()) {
    out.consistent = true;  // angle undefined; nothing to compare
  } else {
    out.consistent = (out.trivial_intersection && out.closed_sum) == out.angle_positive;
  }
  return out;
}

double lemma2_residual(const Subspace& n1, const Subspace& n2, const Subspace& n3) {
  const double lhs = sin_min_angle(n1, n2) - gap(n2, n3).delta_tilde;
  return std::max(0.0, lhs - sin_min_angle(n1, n3));
}

std::vector<cplx> arc_samples(const ModelContext& ctx, std::size_t samples) {
  std::vector<cplx> out;
  if (samples == 0) return out;
  if (samples == 1) {
    out.push_back(ctx.a);
    return out;
  }
  const double radius = ctx.epsilon * (1.0 - 1e-9);
  const double theta_max = 2.0 * std::asin(std::min(1.0, 0.5 * radius));
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta =
        -theta_max + 2.0 * theta_max * static_cast<double>(k) / static_cast<double>(samples - 1);
    out.push_back(ctx.a * std::polar(1.0, theta));
  }
  return out;
}

Theorem35Report theorem35_scan(const ModelContext& ctx, std::size_t samples, ExecPolicy policy) {
  struct Sample {
    double gap;
    double residual;
    bool ok;
  };
  const std::vector<cplx> zs = arc_samples(ctx, samples);
  const Subspace ma_perp = decomposition::subspace_m(ctx, ctx.a).orthogonal_complement();
  const Index dim = 2 * ctx.n();
  const auto results = map_indexed(zs.size(), policy, [&](std::size_t i) {
    Sample s{0.0, 0.0, true};
    const cplx z = zs[i];
    s.gap = gap(ma_perp, decomposition::subspace_m(ctx, z).orthogonal_complement()).delta;
    try {
      const decomposition::Solver solver(ctx, z);
      for (Index k = 0; k < dim; ++k) {
        s.residual = std::max(s.residual, solver.solve(ComplexVector::Unit(dim, k)).residual);
      }
    } catch (const Error&) {
      s.ok = false;
    }
    return s;
  });
  Theorem35Report out;
  out.samples = zs.size();
  for (const Sample& s : results) {
    out.max_gap_on_arc = std::max(out.max_gap_on_arc, s.gap);
    out.max_decomposition_residual = std::max(out.max_decomposition_residual, s.residual);
    out.decomposition_ok = out.decomposition_ok && s.ok;
  }
  out.decomposition_ok = out.decomposition_ok && out.max_decomposition_residual <= 1e-9;
  return out;
}

}  // namespace fmodel::geometry
