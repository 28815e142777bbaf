#include "fmodel/grids.hpp"

#include <cmath>

namespace fmodel::grids {

std::vector<cplx> disc_grid(std::size_t radii, std::size_t angles, double r_max) {
  std::vector<cplx> out;
  out.reserve(radii * angles);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < radii; ++i) {
    const double r = r_max * static_cast<double>(i + 1) / static_cast<double>(radii);
    for (std::size_t j = 0; j < angles; ++j) {
      out.push_back(std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(angles)));
    }
  }
  return out;
}

}  // namespace fmodel::grids
