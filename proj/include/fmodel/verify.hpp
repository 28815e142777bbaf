#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmodel/parallel.hpp"
#include "fmodel/types.hpp"

namespace fmodel {

struct VerifyConfig {
  std::string fixture_id = "operator";
  std::optional<cplx> a;
  std::optional<cplx> beta;
  std::size_t grid = 8;            // disc grid: grid radii x 2*grid angles
  std::size_t arc_grid = 16;       // points of C_eps(a) added to the decomposition sweep
  std::size_t thm35_samples = 64;
  std::size_t random_vectors = 50;  // per grid point in the decomposition sweep
  std::size_t cayley_pairs = 20;
  double tol_scale = 1.0;          // multiplies every asserted threshold
  std::uint64_t seed = 0;
  ExecPolicy policy = ExecPolicy::parallel;
};

struct CheckResult {
  std::string name;
  double max_residual;
  double threshold;
  bool pass;
};

struct OpenFlag {
  std::string name;
  double oracle_value;
  double measured_value;
};

struct VerifyReport {
  std::string fixture_id;
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::vector<OpenFlag> open_flags;
  std::vector<std::pair<std::string, double>> info;
  std::vector<std::string> notes;
  bool pass = false;
};

VerifyReport run_verify(const ComplexMatrix& t, const VerifyConfig& config);

std::string report_to_json(const VerifyReport& report);

}  // namespace fmodel
