#pragma once

#include <optional>
#include <vector>

#include "fmodel/decomposition.hpp"
#include "fmodel/parallel.hpp"

namespace fmodel {

struct GapReport {
  double delta = 0.0;        // max(|(I-P_A)P_B|, |(I-P_B)P_A|)
  double delta_tilde = 0.0;  // unit-sphere gap
  std::optional<double> angle;  // minimal angle; absent if either subspace is {0}
};

struct Lemma1Report {
  bool trivial_intersection = false;
  bool closed_sum = true;  // always true in finite dimension
  bool angle_positive = false;
  Index intersection_dim = 0;
  bool consistent = false;  // (trivial_intersection && closed_sum) == angle_positive
};

struct Theorem35Report {
  double max_gap_on_arc = 0.0;
  double max_decomposition_residual = 0.0;
  bool decomposition_ok = true;
  std::size_t samples = 0;
};

namespace geometry {

/// sin of the minimal angle below which two subspaces are treated as meeting.
inline constexpr double kAngleTol = 1e-8;

GapReport gap(const Subspace& a, const Subspace& b);

/// Sine of the minimal angle, sigma_min((I - P_A) B). Requires nonzero inputs.
double sin_min_angle(const Subspace& a, const Subspace& b);

Lemma1Report lemma1_check(const Subspace& a, const Subspace& b);

/// max(0, sin a(N1,N2) - delta~(N2,N3) - sin a(N1,N3)).
double lemma2_residual(const Subspace& n1, const Subspace& n2, const Subspace& n3);

/// z = a e^{i theta_k}, theta_k evenly spaced so that the end points sit at
/// |z - a| = eps (1 - 1e-9). A single sample is z = a.
std::vector<cplx> arc_samples(const ModelContext& ctx, std::size_t samples);

Theorem35Report theorem35_scan(const ModelContext& ctx, std::size_t samples,
                               ExecPolicy policy = ExecPolicy::serial);

}  // namespace geometry
}  // namespace fmodel
