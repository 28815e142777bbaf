// fmodel: command-line front end for the functional-model toolkit.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fmodel/coincidence.hpp"
#include "fmodel/crosscheck.hpp"
#include "fmodel/debranges.hpp"
#include "fmodel/kernel_grid.hpp"
#include "fmodel/operator_io.hpp"
#include "fmodel/verify.hpp"

using namespace fmodel;

namespace {

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadParam, "expected RE,IM but got '" + text + "'");
  }
}

std::string show(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

ModelContext context_for(const std::string& path, const std::string& a_text) {
  const Contraction c = Contraction::validate(io::load_operator(path));
  std::optional<cplx> preferred;
  if (!a_text.empty()) preferred = parse_complex(a_text);
  return decomposition::make_context(c, contraction::boundary_resolvent(c, preferred));
}

int run_analyze(const std::string& path) {
  const ComplexMatrix t = io::load_operator(path);
  const Contraction c = Contraction::validate(t);
  const auto sm = numcore::spectral_metrics(t);
  std::cout << "dim               " << c.n() << "\n"
            << "norm              " << sm.op_norm << "\n"
            << "defect dims       " << c.defect_t().dim() << " / " << c.defect_tstar().dim() << "\n";
  const CnuReport cnu = contraction::is_cnu(c);
  std::cout << "cnu               " << (cnu.is_cnu ? "yes" : "no") << "\n";
  for (const auto& [lambda, v] : cnu.unitary_eigenpairs) {
    std::cout << "  unimodular eig  " << show(lambda) << "\n";
  }
  if (!cnu.is_cnu) return 1;
  const ModelContext ctx = decomposition::make_context(c, contraction::boundary_resolvent(c));
  std::cout << "a                 " << show(ctx.a) << "\n"
            << "c_a               " << ctx.c_a << "\n"
            << "epsilon           " << ctx.epsilon << "\n"
            << "dim Y             " << ctx.y.dim() << "\n"
            << "spectrum residual " << dilation::spectrum_union_residual(ctx.dilation, c) << "\n"
            << "arc radius (emp.) " << decomposition::empirical_arc_radius(ctx) << "\n";
  const DeBrangesOperator e = debranges::select_beta(ctx);
  std::cout << "beta              " << show(e.beta) << "\n";
  return 0;
}

int run_verify_cmd(const std::string& path, const VerifyConfig& base, const std::string& a_text,
                   const std::string& beta_text, const std::string& out_path) {
  VerifyConfig config = base;
  config.fixture_id = stem(path);
  if (!a_text.empty()) config.a = parse_complex(a_text);
  if (!beta_text.empty()) config.beta = parse_complex(beta_text);
  const VerifyReport report = run_verify(io::load_operator(path), config);
  const std::string text = report_to_json(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadParam, "cannot write " + out_path);
    out << text;
  }
  std::size_t failed = 0;
  for (const auto& check : report.checks) {
    if (!check.pass) {
      ++failed;
      std::cerr << "FAIL " << check.name << " residual=" << check.max_residual
                << " threshold=" << check.threshold << "\n";
    }
  }
  for (const auto& note : report.notes) std::cerr << "note: " << note << "\n";
  std::cerr << (report.pass ? "PASS" : "FAIL") << " " << config.fixture_id << ": "
            << report.checks.size() - failed << "/" << report.checks.size() << " checks, "
            << report.open_flags.size() << " open flags\n";
  return report.pass ? 0 : 1;
}

int run_kernel(const std::string& path, const std::string& points, const std::string& out_path,
               const std::string& a_text) {
  const ModelContext ctx = context_for(path, a_text);
  const auto pairs = points == "grid" ? kernel_grid::default_points(ctx) : kernel_grid::load_points(points);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParam, "cannot write " + out_path);
  const std::size_t flagged = kernel_grid::write_csv(ctx, pairs, out);
  std::cerr << pairs.size() << " rows, " << flagged << " flagged\n";
  return 0;
}

int run_coincide(const std::string& path, std::size_t samples, const std::string& a_text) {
  const ModelContext ctx = context_for(path, a_text);
  const CoincidenceContext cc = coincidence::build(ctx);
  const ComplexVector f = ComplexVector::Unit(ctx.n(), 0);
  std::cout << "z_re,z_im,thm51_residual,thm51_oracle,eq54_paper_first,eq54_paper_second,"
               "eq54_oblique_first,final_kernel_residual\n";
  for (std::size_t k = 0; k < samples; ++k) {
    // points on the ray towards a, r in (0, 0.95]
    const double r = 0.95 * static_cast<double>(k + 1) / static_cast<double>(samples);
    const cplx z = r * ctx.a;
    const Eq54Residuals paper = coincidence::eq54_residuals(cc, JVariant::paper, z, f);
    const Eq54Residuals oblique = coincidence::eq54_residuals(cc, JVariant::oblique, z, f);
    std::cout << io::format_double(z.real()) << ',' << io::format_double(z.imag()) << ','
              << io::format_double(coincidence::coincidence_residual(cc, z, f).residual) << ','
              << io::format_double(crosscheck::thm51_residual(ctx, z, f)) << ','
              << io::format_double(paper.first) << ',' << io::format_double(paper.second) << ','
              << io::format_double(oblique.first) << ','
              << io::format_double(coincidence::final_kernel_identity_residual(cc, z, z)) << '\n';
  }
  return 0;
}

int run_fixture(const std::string& kind, Index dim, std::uint64_t seed, double r,
                const std::string& out_path) {
  io::save_operator(fixtures::generate(fixtures::parse_kind(kind), dim, seed, r), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional-model toolkit for cnu contractions"};
  app.require_subcommand(1);

  std::string file, a_text, beta_text, out_path, points, kind;
  VerifyConfig vcfg;
  std::size_t samples = 8;
  long long dim = 1;
  std::uint64_t seed = 0;
  double r = 0.9;
  bool serial = false;

  auto* analyze = app.add_subcommand("analyze", "Summarize an operator file");
  analyze->add_option("file", file, "Operator file (.json or .csv)")->required();

  auto* verify = app.add_subcommand("verify", "Run every check and write a JSON report");
  verify->add_option("file", file)->required();
  verify->add_option("--a", a_text, "Boundary point RE,IM (default 1)");
  verify->add_option("--beta", beta_text, "de Branges point RE,IM (default a/2)");
  verify->add_option("--grid", vcfg.grid, "Disc grid radii (angles = 2N)")->check(CLI::PositiveNumber);
  verify->add_option("--tol", vcfg.tol_scale, "Threshold multiplier")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vcfg.seed, "Seed for random test vectors");
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->add_flag("--serial", serial, "Disable the parallel grid scans");

  auto* kernel = app.add_subcommand("kernel", "Export kernel values K_w(z) as CSV");
  kernel->add_option("file", file)->required();
  kernel->add_option("--points", points, "Point-pair CSV or 'grid'")->required();
  kernel->add_option("--out", out_path)->required();
  kernel->add_option("--a", a_text);

  auto* coincide = app.add_subcommand("coincide", "Report the coincidence residuals along a ray");
  coincide->add_option("file", file)->required();
  coincide->add_option("--samples", samples)->check(CLI::PositiveNumber);
  coincide->add_option("--a", a_text);

  auto* fixture = app.add_subcommand("fixture", "Generate a test operator");
  fixture->add_option("--kind", kind, "zero|jordan|scaled_unitary|diagonal")->required();
  fixture->add_option("--dim", dim)->required();
  fixture->add_option("--seed", seed);
  fixture->add_option("--r", r);
  fixture->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(file);
    if (*verify) {
      if (serial) vcfg.policy = ExecPolicy::serial;
      return run_verify_cmd(file, vcfg, a_text, beta_text, out_path);
    }
    if (*kernel) return run_kernel(file, points, out_path, a_text);
    if (*coincide) return run_coincide(file, samples, a_text);
    if (*fixture) return run_fixture(kind, static_cast<Index>(dim), seed, r, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
