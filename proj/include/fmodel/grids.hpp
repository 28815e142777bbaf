#pragma once

#include <cstddef>
#include <vector>

#include "fmodel/types.hpp"

namespace fmodel::grids {

/// Polar grid of the open disc: radii r_max (k+1)/radii, angles 2 pi j/angles.
std::vector<cplx> disc_grid(std::size_t radii, std::size_t angles, double r_max = 0.95);

}  // namespace fmodel::grids
