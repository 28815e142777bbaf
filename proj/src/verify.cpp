#include "fmodel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <json.hpp>

#include "fmodel/coincidence.hpp"
#include "fmodel/crosscheck.hpp"
#include "fmodel/debranges.hpp"
#include "fmodel/geometry.hpp"
#include "fmodel/grids.hpp"
#include "fmodel/model.hpp"

namespace fmodel {

namespace {

// Independent stream per (suite, index) so results do not depend on the
// order in which parallel workers pick up grid points.
std::mt19937_64 stream(std::uint64_t seed, std::uint32_t suite, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite,
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ComplexMatrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

ComplexVector unit_vector(std::mt19937_64& rng, Index dim) {
  ComplexVector v = gaussian(rng, dim, 1).col(0);
  return v / v.norm();
}

// NaN is sticky so a broken sample cannot hide behind the max.
double nan_max(double acc, double v) {
  if (std::isnan(acc)) return acc;
  if (std::isnan(v)) return v;
  return std::max(acc, v);
}

class Harness {
 public:
  Harness(const VerifyConfig& config, VerifyReport& report) : config_(config), report_(report) {}

  void check(const std::string& name, double residual, double threshold) {
    const double thr = threshold * config_.tol_scale;
    report_.checks.push_back({name, residual, thr, residual <= thr});
  }
  void check_exact(const std::string& name, double residual, double threshold = 0.0) {
    report_.checks.push_back({name, residual, threshold, residual <= threshold});
  }
  void flag(const std::string& name, double oracle, double measured) {
    report_.open_flags.push_back({name, oracle, measured});
  }
  void info(const std::string& name, double value) { report_.info.emplace_back(name, value); }
  void note(const std::string& text) { report_.notes.push_back(text); }

  // Runs a suite; any library error becomes a failed check named <suite>.error.
  bool suite(const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const Error& e) {
      check_exact(name + ".error", 1.0);
      note(name + ": " + e.what());
    } catch (const std::exception& e) {
      check_exact(name + ".error", 1.0);
      note(name + ": " + e.what());
    }
    return false;
  }

 private:
  const VerifyConfig& config_;
  VerifyReport& report_;
};

struct SweepPoint {
  double decomposition = 0.0;
  double idempotency = 0.0;
  double annihilation = 0.0;
  double range = 0.0;
  double intertwine = 0.0;
  double char_excess = 0.0;
  double char_identity = 0.0;
  double eq54_oblique = 0.0;
  double oblique_vs_solver = 0.0;
  double fz_gram = 0.0;
  bool fz_bound = true;
  double thm51 = 0.0;
  double thm51_oracle = 0.0;
};

}  // namespace

VerifyReport run_verify(const ComplexMatrix& t_raw, const VerifyConfig& config) {
  VerifyReport report;
  report.fixture_id = config.fixture_id;
  report.config = config;
  Harness h(config, report);
  const double nd = static_cast<double>(std::max<Index>(t_raw.rows(), 1));

  // contraction gate
  std::optional<Contraction> c;
  cplx a(1.0, 0.0);
  bool gate = h.suite("contraction", [&] {
    c = Contraction::validate(t_raw);
    const CnuReport cnu = contraction::is_cnu(*c);
    h.check_exact("contraction.cnu_gate", static_cast<double>(cnu.unitary_eigenpairs.size()));
    if (!cnu.is_cnu) throw Error(ErrorKind::NotCnu, "operator has a unimodular eigenvalue");
    a = contraction::boundary_resolvent(*c, config.a);
  });
  if (!gate) {
    h.note("remaining suites skipped: operator is not a cnu contraction with a boundary resolvent point");
    report.pass = false;
    return report;
  }
  const Index n = c->n();
  h.check("contraction.defect_sqrt", contraction::defect_residual(*c), 1e-9 * nd);
  h.check("contraction.intertwining", contraction::intertwining_residual(*c), 1e-12 * nd);
  h.info("dim", nd);
  h.info("a_re", a.real());
  h.info("a_im", a.imag());

  std::optional<ModelContext> ctx;
  if (!h.suite("decomposition.context", [&] { ctx = decomposition::make_context(*c, a); })) {
    h.note("remaining suites skipped: no model context");
    report.pass = false;
    return report;
  }
  h.info("c_a", ctx->c_a);
  h.info("epsilon", ctx->epsilon);
  h.info("ker_v_symbolic", ctx->dilation.ker_v_symbolic ? 1.0 : 0.0);
  h.info("ker_v_mismatch", ctx->dilation.ker_v_mismatch);

  // dilation
  h.suite("dilation", [&] {
    const DilationPair& d = ctx->dilation;
    h.check("dilation.julia_unitarity", dilation::julia_unitarity_residual(d), 1e-10 * nd);
    auto rng = stream(config.seed, 1, 0);
    ComplexMatrix hs(n, 100);
    for (Index k = 0; k < 100; ++k) hs.col(k) = unit_vector(rng, n);
    h.check("dilation.v0_isometry", dilation::isometry_residual(d, hs), 1e-12);
    h.check("dilation.extension_agreement", dilation::extension_agreement_residual(d), 1e-12);
    h.check("dilation.spectrum_union", dilation::spectrum_union_residual(d, *c), 1e-7 * nd);
    h.check("dilation.ker_vstar", dilation::ker_vstar_residual(d, *c), 1e-10);

    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double two_pi = 2.0 * std::acos(-1.0);
    std::vector<std::pair<cplx, cplx>> pairs;
    auto prng = stream(config.seed, 2, 0);
    auto draw = [&](std::size_t k) {
      const double r = 0.1 + 0.8 * u(prng);
      return std::polar(k % 2 == 0 ? r : 1.0 / r, two_pi * u(prng));
    };
    for (std::size_t k = 0; k < config.cayley_pairs; ++k) pairs.emplace_back(draw(k), draw(k + 1));
    const auto res = map_indexed(pairs.size(), config.policy, [&](std::size_t i) {
      return dilation::cayley_lemma_residuals(d, *ctx, pairs[i].first, pairs[i].second);
    });
    double inv = 0.0, map_m = 0.0, map_mperp = 0.0;
    for (const auto& r : res) {
      inv = nan_max(inv, r.inv);
      map_m = nan_max(map_m, r.map_m);
      if (r.map_mperp) map_mperp = nan_max(map_mperp, *r.map_mperp);
    }
    h.check("dilation.cayley_inverse", inv, 1e-9);
    h.check("dilation.cayley_map_m", map_m, 1e-9);
    h.check("dilation.cayley_map_mperp", map_mperp, 1e-9);
  });

  // coincidence context first: the disc sweep below shares its solver
  std::optional<CoincidenceContext> cc;
  h.suite("coincidence.build", [&] { cc = coincidence::build(*ctx); });

  // grid sweep: contraction, decomposition, model and coincidence checks per point
  const std::vector<cplx> disc = grids::disc_grid(config.grid, 2 * config.grid);
  const std::vector<cplx> arc = geometry::arc_samples(*ctx, config.arc_grid);
  std::vector<cplx> sweep = disc;
  sweep.insert(sweep.end(), arc.begin(), arc.end());
  const ComplexVector e1 = ComplexVector::Unit(n, 0);
  h.suite("sweep", [&] {
    const Index dim = 2 * n;
    const auto points = map_indexed(sweep.size(), config.policy, [&](std::size_t i) {
      SweepPoint s;
      const cplx z = sweep[i];
      const bool in_disc = i < disc.size();
      const decomposition::Solver solver(*ctx, z);
      const PYEvaluation& ev = solver.evaluation();
      auto rng = stream(config.seed, 3, i);
      for (std::size_t k = 0; k < config.random_vectors; ++k) {
        s.decomposition = nan_max(s.decomposition, solver.solve(unit_vector(rng, dim)).residual);
      }
      s.idempotency = numcore::op_norm(ev.p_y * ev.p_y - ev.p_y);
      s.annihilation = numcore::op_norm(ev.p_y * decomposition::subspace_m(*ctx, z).basis());
      s.range = geometry::gap(numcore::column_space(ev.p_y), ctx->y).delta;
      s.intertwine = model::intertwine_residual(*ctx, ev);
      if (in_disc) {
        s.char_excess =
            std::max(0.0, numcore::op_norm(contraction::char_function(*c, z)) - 1.0);
        s.char_identity = contraction::char_identity_residual(*c, z);
        if (cc) {
          const ComplexVector f = unit_vector(rng, n);
          const Eq54Residuals ob = coincidence::eq54_residuals(*cc, JVariant::oblique, z, f);
          s.eq54_oblique = std::max(ob.first, ob.second);
          ComplexVector target = ComplexVector::Zero(dim);
          target.tail(n) = c->d_t() * f;
          s.oblique_vs_solver =
              (coincidence::j_vector(*cc, JVariant::oblique, z, f) - solver.solve(target).g).norm();
          const FzGramReport fz = coincidence::fz_gram_check(*cc, z);
          s.fz_gram = fz.gram_residual;
          s.fz_bound = fz.lower_bound_ok;
          s.thm51 = coincidence::coincidence_residual(*cc, z, e1).residual;
          s.thm51_oracle = crosscheck::thm51_residual(*ctx, z, e1);
        }
      }
      return s;
    });
    SweepPoint m;
    double thm51_gap = 0.0;
    for (const SweepPoint& s : points) {
      m.decomposition = nan_max(m.decomposition, s.decomposition);
      m.idempotency = nan_max(m.idempotency, s.idempotency);
      m.annihilation = nan_max(m.annihilation, s.annihilation);
      m.range = nan_max(m.range, s.range);
      m.intertwine = nan_max(m.intertwine, s.intertwine);
      m.char_excess = nan_max(m.char_excess, s.char_excess);
      m.char_identity = nan_max(m.char_identity, s.char_identity);
      m.eq54_oblique = nan_max(m.eq54_oblique, s.eq54_oblique);
      m.oblique_vs_solver = nan_max(m.oblique_vs_solver, s.oblique_vs_solver);
      m.fz_gram = nan_max(m.fz_gram, s.fz_gram);
      m.fz_bound = m.fz_bound && s.fz_bound;
      m.thm51 = nan_max(m.thm51, s.thm51);
      m.thm51_oracle = nan_max(m.thm51_oracle, s.thm51_oracle);
      thm51_gap = nan_max(thm51_gap, std::abs(s.thm51 - s.thm51_oracle));
    }
    h.check("contraction.char_norm_excess", m.char_excess, 1e-10);
    h.check("contraction.char_identity", m.char_identity, 1e-9);
    h.check("decomposition.residual", m.decomposition, 1e-9);
    h.check("decomposition.idempotency", m.idempotency, 1e-9);
    h.check("decomposition.annihilation", m.annihilation, 1e-9);
    h.check("decomposition.range", m.range, 1e-9);
    h.check("model.intertwining", m.intertwine, 1e-9);
    if (cc) {
      h.check("coincidence.eq54_oblique", m.eq54_oblique, 1e-9);
      h.check("coincidence.oblique_vs_decompose", m.oblique_vs_solver, 1e-9);
      h.check("coincidence.fz_gram", m.fz_gram, 1e-10 * nd);
      h.check_exact("coincidence.fz_lower_bound", m.fz_bound ? 0.0 : 1.0);
      h.flag("thm51_max_residual_disc_grid", m.thm51_oracle, m.thm51);
      h.check("coincidence.harness_agreement_grid", thm51_gap, 1e-10);
    }
  });

  // decomposition: consistency at a and the Straus extension
  h.suite("decomposition", [&] {
    const PYEvaluation at_a = decomposition::projector_py(*ctx, ctx->a);
    h.check("decomposition.orthogonal_at_a", numcore::op_norm(at_a.p_y - ctx->y.projector()), 1e-10);
    const StrausExtension se = decomposition::straus_extension(*ctx);
    h.check("decomposition.straus_isometry", se.isometry_residual, 1e-10 * nd);
    h.check_exact("decomposition.straus_dims",
                  static_cast<double>(std::abs(se.domain_dim - 2 * n) + std::abs(se.range_dim - 2 * n)));
    h.check_exact("decomposition.straus_step1",
                  static_cast<double>(numcore::intersection_dim(ctx->dilation.ker_v_perp, ctx->y)));
    h.info("straus_step1_sin_angle", se.step1_sin_angle);
    h.info("empirical_arc_radius", decomposition::empirical_arc_radius(*ctx));
  });

  // geometry
  h.suite("geometry", [&] {
    const Theorem35Report scan = geometry::theorem35_scan(*ctx, config.thm35_samples, config.policy);
    h.check_exact("geometry.thm35_max_gap", scan.max_gap_on_arc, 1.0 / 3.0 + 1e-9 * config.tol_scale);
    h.check("geometry.thm35_decomposition", scan.decomposition_ok ? scan.max_decomposition_residual : 1.0,
            1e-9);

    // gap laws on M_z pairs from the grid and on seeded random triples
    const Index dim = 2 * n;
    std::vector<Subspace> subspaces;
    const std::size_t stride = std::max<std::size_t>(1, sweep.size() / 12);
    for (std::size_t i = 0; i < sweep.size(); i += stride) {
      subspaces.push_back(decomposition::subspace_m(*ctx, sweep[i]));
    }
    subspaces.push_back(decomposition::subspace_m(*ctx, ctx->a));
    subspaces.push_back(ctx->y);
    auto rng = stream(config.seed, 4, 0);
    std::uniform_int_distribution<Index> pick_dim(1, std::max<Index>(1, dim - 1));
    for (int k = 0; k < 24; ++k) {
      subspaces.push_back(numcore::column_space(gaussian(rng, dim, pick_dim(rng))));
    }
    double sym = 0.0, comp = 0.0, sandwich = 0.0, l2 = 0.0;
    bool l1 = true;
    const std::size_t m = subspaces.size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      const std::size_t k = (i + 5) % m;
      const GapReport ab = geometry::gap(subspaces[i], subspaces[j]);
      const GapReport ba = geometry::gap(subspaces[j], subspaces[i]);
      const GapReport cp = geometry::gap(subspaces[i].orthogonal_complement(),
                                         subspaces[j].orthogonal_complement());
      sym = nan_max(sym, std::abs(ab.delta - ba.delta));
      comp = nan_max(comp, std::abs(ab.delta - cp.delta));
      sandwich = nan_max(sandwich, std::max(ab.delta - ab.delta_tilde, ab.delta_tilde - 2.0 * ab.delta));
      l2 = nan_max(l2, geometry::lemma2_residual(subspaces[i], subspaces[j], subspaces[k]));
      l1 = l1 && geometry::lemma1_check(subspaces[i], subspaces[j]).consistent;
    }
    h.check("geometry.gap_symmetry", sym, 1e-12);
    h.check("geometry.gap_complement", comp, 1e-10);
    h.check("geometry.gap_sandwich", sandwich, 1e-10);
    h.check("geometry.lemma2", l2, 1e-9);
    h.check_exact("geometry.lemma1_consistency", l1 ? 0.0 : 1.0);
  });

  // model / RKHS
  const cplx i1(0.0, 1.0);
  const std::vector<cplx> model_points = {0.3 * a, -0.3 * a, 0.3 * i1 * a, -0.3 * i1 * a,
                                          std::polar(0.6, 0.4) * a, std::polar(0.6, 2.0) * a,
                                          std::polar(0.6, -1.1) * a, std::polar(0.6, -2.6) * a};
  std::optional<cplx> beta;
  h.suite("model", [&] {
    double herm = 0.0;
    for (std::size_t i = 0; i < model_points.size(); ++i) {
      for (std::size_t j = i; j < model_points.size(); ++j) {
        const ComplexMatrix kzw = model::kernel(*ctx, model_points[i], model_points[j]).k;
        const ComplexMatrix kwz = model::kernel(*ctx, model_points[j], model_points[i]).k;
        herm = nan_max(herm, numcore::op_norm(kzw.adjoint() - kwz));
      }
    }
    h.check("model.kernel_hermitian", herm, 1e-10);
    const ComplexMatrix gram = model::kernel_gram(*ctx, model_points);
    const auto sm = numcore::spectral_metrics(gram, 1e-10);
    h.check("model.gram_psd", sm.min_herm_eig ? std::max(0.0, -*sm.min_herm_eig) : 1.0, 1e-10);

    const std::vector<cplx> inj = {cplx(0.0), 0.5 * a, -0.5 * i1 * a, cplx(0.25, 0.25) * a};
    const InjectivityReport ir = model::injectivity_check(*ctx, inj);
    h.check_exact("model.injectivity", static_cast<double>(ir.combined_kernel_dim));
    const CompressionReport cr = model::compression_check(*ctx, inj);
    h.check("model.compression", cr.total(), 1e-10 * nd);

    auto rng = stream(config.seed, 5, 0);
    const std::vector<cplx> frame = {0.2 * a, -0.45 * a, 0.5 * i1 * a, std::polar(0.7, 2.5) * a};
    const ComplexMatrix cf = gaussian(rng, n, static_cast<Index>(frame.size()));
    const ComplexMatrix df = gaussian(rng, n, static_cast<Index>(frame.size()));
    h.check("model.reproducing", model::frame_inner_product_residual(*ctx, frame, cf, df), 1e-8);

    const cplx b = config.beta.value_or(a / 2.0);
    beta = b;
    double dq = 0.0;
    const std::vector<cplx> aux = {0.25 * a, -0.4 * a, 0.35 * i1 * a, std::polar(0.8, 1.9) * a,
                                   std::polar(1.7, -0.8) * a};
    for (int k = 0; k < 3; ++k) {
      dq = nan_max(dq, model::difference_quotient_residual(*ctx, b, unit_vector(rng, 2 * n), aux));
    }
    h.check("model.apply_r", dq, 1e-9);

    const Subspace m_beta = decomposition::subspace_m(*ctx, b);
    double iso = 0.0, van = 0.0;
    for (Index k = 0; k < m_beta.dim(); ++k) {
      const SBetaResult s = model::s_beta(*ctx, b, m_beta.basis().col(k));
      iso = nan_max(iso, s.isometry_residual);
      van = nan_max(van, s.vanish_residual);
    }
    h.check("model.s_beta_isometry", iso, 1e-9);
    h.check("model.s_beta_vanish", van, 1e-9);
  });

  // de Branges
  h.suite("debranges", [&] {
    const DeBrangesOperator e = debranges::select_beta(*ctx, config.beta);
    beta = e.beta;
    std::vector<cplx> pts(model_points.begin(), model_points.end());
    pts.push_back(1.5 * std::polar(1.0, 0.3) * a);
    pts.push_back(2.5 * i1 * a);
    const double half = 2.0 * std::asin(0.25 * ctx->epsilon);
    pts.push_back(a * std::polar(1.0, half));
    pts.push_back(a * std::polar(1.0, -half));
    std::vector<std::pair<cplx, cplx>> pairs;
    for (cplx z : pts)
      for (cplx w : pts) pairs.emplace_back(z, w);
    const double recon = max_over(pairs.size(), config.policy, [&](std::size_t i) {
      return debranges::reconstruction_residual(e, pairs[i].first, pairs[i].second);
    });
    h.check("debranges.reconstruction", recon, 1e-8);

    const ComplexMatrix ep = debranges::evaluate(e, e.beta).e_plus;
    const auto sm = numcore::spectral_metrics(ep, 1e-10);
    const double psd = sm.min_herm_eig ? std::max(0.0, -*sm.min_herm_eig)
                                       : numcore::op_norm(ep - ep.adjoint());
    h.check("debranges.e_plus_beta_psd", psd, 1e-10);

    const Condition3Report c3 =
        debranges::condition3_scan(e, config.grid, config.arc_grid, config.policy);
    h.check("debranges.condition3_disc", c3.max_disc_excess, 1e-9);
    h.check("debranges.condition3_arc", c3.max_arc_defect, 1e-8);
    h.info("condition3_skipped", static_cast<double>(c3.skipped.size()));

    const std::vector<cplx> zs(model_points.begin(), model_points.begin() + 4);
    const FredholmReport fr = debranges::fredholm_report(*ctx, e.beta, zs);
    h.check_exact("debranges.fredholm", (fr.inv_beta && fr.inv_conj && fr.index_zero) ? 0.0 : 1.0);
    const ThmMReport tm = debranges::thm_m_hypotheses(*ctx, e.beta, zs);
    Index worst = std::max(tm.dim_m0_cap_mbeta_perp, tm.dim_m0_cap_mconj_perp);
    for (const auto& row : tm.rows) {
      worst = std::max({worst, row.dim_mzperp_cap_mbeta, row.dim_mzperp_cap_mconj});
    }
    h.info("thm_m_max_intersection_dim", static_cast<double>(worst));
  });
  if (beta) {
    h.info("beta_re", beta->real());
    h.info("beta_im", beta->imag());
  }

  // coincidence: asserted structure, reported identities
  if (cc) {
    h.suite("coincidence", [&] {
      h.check("coincidence.defect_identity", cc->defect_identity_residual, 1e-10);
      h.check("coincidence.gamma_unitarity", coincidence::gamma_unitarity_residual(*cc), 1e-10 * nd);
      const cplx half(0.5, 0.0);
      const double thm51 = coincidence::coincidence_residual(*cc, half, e1).residual;
      const double thm51_o = crosscheck::thm51_residual(*ctx, half, e1);
      const Eq54Residuals paper = coincidence::eq54_residuals(*cc, JVariant::paper, half, e1);
      const Eq54Residuals paper_o = crosscheck::eq54_paper(*ctx, half, e1);
      const double fk_half = coincidence::final_kernel_identity_residual(*cc, half, half);
      const double fk_half_o = crosscheck::final_kernel_residual(*ctx, half, half);
      const double fk_zero = coincidence::final_kernel_identity_residual(*cc, 0.0, 0.0);
      const double fk_zero_o = crosscheck::final_kernel_residual(*ctx, 0.0, 0.0);
      h.flag("thm51_residual_z=0.5", thm51_o, thm51);
      h.flag("eq54_paper_first_z=0.5", paper_o.first, paper.first);
      h.flag("eq54_paper_second_z=0.5", paper_o.second, paper.second);
      h.flag("final_kernel_residual_z=w=0.5", fk_half_o, fk_half);
      h.flag("final_kernel_residual_z=w=0", fk_zero_o, fk_zero);
      const double agree = std::max({std::abs(thm51 - thm51_o), std::abs(paper.first - paper_o.first),
                                     std::abs(paper.second - paper_o.second),
                                     std::abs(fk_half - fk_half_o), std::abs(fk_zero - fk_zero_o)});
      h.check("coincidence.harness_agreement", agree, 1e-10);
    });
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& r) { return r.pass; });
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  using json = nlohmann::ordered_json;
  auto num = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  json doc;
  doc["fixture_id"] = report.fixture_id;
  json cfg;
  const VerifyConfig& c = report.config;
  for (const auto& [k, v] : report.info) {
    if (k == "a_re") cfg["a"] = json::array({v, 0.0});
    if (k == "a_im" && cfg.contains("a")) cfg["a"][1] = v;
    if (k == "beta_re") cfg["beta"] = json::array({v, 0.0});
    if (k == "beta_im" && cfg.contains("beta")) cfg["beta"][1] = v;
  }
  if (!cfg.contains("a")) cfg["a"] = c.a ? json::array({c.a->real(), c.a->imag()}) : json(nullptr);
  if (!cfg.contains("beta")) {
    cfg["beta"] = c.beta ? json::array({c.beta->real(), c.beta->imag()}) : json(nullptr);
  }
  cfg["grid"] = {{"disc_radii", c.grid}, {"disc_angles", 2 * c.grid}, {"arc", c.arc_grid},
                 {"thm35_samples", c.thm35_samples}};
  cfg["tol_scale"] = c.tol_scale;
  cfg["seed"] = c.seed;
  cfg["extension"] = "julia";
  doc["config"] = std::move(cfg);
  json checks = json::array();
  for (const auto& r : report.checks) {
    checks.push_back({{"name", r.name}, {"max_residual", num(r.max_residual)},
                      {"threshold", num(r.threshold)}, {"pass", r.pass}});
  }
  doc["checks"] = std::move(checks);
  json flags = json::array();
  for (const auto& f : report.open_flags) {
    flags.push_back({{"name", f.name}, {"oracle_value", num(f.oracle_value)},
                     {"measured_value", num(f.measured_value)}});
  }
  doc["open_flags"] = std::move(flags);
  json info = json::object();
  for (const auto& [k, v] : report.info) info[k] = num(v);
  doc["info"] = std::move(info);
  doc["notes"] = report.notes;
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

}  // namespace fmodel
