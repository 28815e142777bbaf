#include "fmodel/kernel_grid.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmodel/grids.hpp"
#include "fmodel/model.hpp"

namespace fmodel::kernel_grid {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::vector<PointPair> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::vector<PointPair> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.find_first_of("abcdfghijklmnopqrstuvwxyz_") != std::string::npos) continue;  // header
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(cells, cell, ',')) {
      try {
        v.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad number '" + cell + "' in " + path);
      }
    }
    if (v.size() != 4) throw Error(ErrorKind::ShapeError, "point rows need 4 values");
    out.emplace_back(cplx(v[0], v[1]), cplx(v[2], v[3]));
  }
  return out;
}

std::vector<PointPair> default_points(const ModelContext& ctx) {
  std::vector<cplx> pts = grids::disc_grid(2, 4, 0.8);
  pts.push_back(ctx.a);
  std::vector<PointPair> out;
  for (cplx z : pts)
    for (cplx w : pts) out.emplace_back(z, w);
  return out;
}

std::size_t write_csv(const ModelContext& ctx, const std::vector<PointPair>& points,
                      std::ostream& out) {
  const Index n = ctx.n();
  out << "z_re,z_im,w_re,w_im";
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out << ",k_" << i << '_' << j << "_re,k_" << i << '_' << j << "_im";
  out << ",flag\n";
  std::size_t flagged = 0;
  for (const auto& [z, w] : points) {
    out << fmt17(z.real()) << ',' << fmt17(z.imag()) << ',' << fmt17(w.real()) << ','
        << fmt17(w.imag());
    ComplexMatrix k;
    try {
      k = model::kernel(ctx, z, w).k;
    } catch (const Error& e) {
      for (Index c = 0; c < 2 * n * n; ++c) out << ',';
      out << ',' << to_string(e.kind()) << '\n';
      ++flagged;
      continue;
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) out << ',' << fmt17(k(i, j).real()) << ',' << fmt17(k(i, j).imag());
    out << ",ok\n";
  }
  return flagged;
}

}  // namespace fmodel::kernel_grid
