#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fmodel/decomposition.hpp"

namespace fmodel::kernel_grid {

using PointPair = std::pair<cplx, cplx>;

/// Reads "z_re,z_im,w_re,w_im" rows; a header line is skipped.
std::vector<PointPair> load_points(const std::string& path);

/// All ordered pairs over a small disc grid (2 radii x 4 angles) plus a.
std::vector<PointPair> default_points(const ModelContext& ctx);

/// Writes z_re,z_im,w_re,w_im, the row-major K entries (re,im interleaved)
/// and a flag column. Rows the kernel cannot be evaluated at (DomainError
/// outside Omega_a, IllConditioned) keep empty K cells and carry the error
/// kind as flag. Returns the number of flagged rows.
std::size_t write_csv(const ModelContext& ctx, const std::vector<PointPair>& points,
                      std::ostream& out);

}  // namespace fmodel::kernel_grid
