#include <cmath>

#include <doctest.h>

#include "fmodel/decomposition.hpp"
#include "fmodel/operator_io.hpp"
#include "test_util.hpp"

using namespace fmodel;
using testutil::error_kind;
using testutil::max_abs_diff;

TEST_CASE("build FIX1") {
  const auto d = dilation::build(Contraction::validate(testutil::fix1()));
  ComplexMatrix v(2, 2), vt(2, 2);
  v << 0, 0, 1, 0;
  vt << 0, 1, 1, 0;
  CHECK(max_abs_diff(d.v0, v) == 0.0);
  CHECK(max_abs_diff(d.v, v) == 0.0);
  CHECK(max_abs_diff(d.v_tilde, vt) < 1e-15);
  REQUIRE(d.ker_v.dim() == 1);
  CHECK(std::abs(std::abs(d.ker_v.basis()(1, 0)) - 1.0) < 1e-15);
  REQUIRE(d.ker_vstar.dim() == 1);
  CHECK(std::abs(std::abs(d.ker_vstar.basis()(0, 0)) - 1.0) < 1e-15);
  CHECK(d.ker_v_symbolic);
}

TEST_CASE("build FIX2 gives the Julia matrix") {
  const auto c = Contraction::validate(testutil::fix2());
  const auto d = dilation::build(c);
  const auto m = oracle::make_model(testutil::to_oracle(testutil::fix2()), 1.0);
  CHECK(max_abs_diff(d.v_tilde, testutil::from_oracle(oracle::julia_v(m))) < 1e-15);
  CHECK(dilation::julia_unitarity_residual(d) < 1e-15);
  CHECK(d.ker_v.dim() == 2);
  CHECK(d.ker_v_mismatch < 1e-12);
  CHECK(dilation::ker_vstar_residual(d, c) < 1e-12);
  CHECK(dilation::extension_agreement_residual(d) == 0.0);
}

TEST_CASE("spectrum union") {
  for (const ComplexMatrix& t : {testutil::fix1(), testutil::fix2()}) {
    const auto c = Contraction::validate(t);
    CHECK(dilation::spectrum_union_residual(dilation::build(c), c) < 1e-7);
  }
  const auto su = fixtures::generate(FixtureKind::scaled_unitary, 8, 1, 0.9);
  const auto c = Contraction::validate(su);
  CHECK(dilation::spectrum_union_residual(dilation::build(c), c) <= 1e-7);
}

TEST_CASE("regular type constant") {
  const auto d = dilation::build(Contraction::validate(testutil::fix1()));
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(std::abs(dilation::regular_type_constant(d, 1.0) - golden) < 1e-14);
  CHECK(std::abs(dilation::regular_type_constant(d, -1.0) - golden) < 1e-14);
  const auto unit = dilation::build(Contraction::validate(ComplexMatrix::Identity(1, 1)));
  CHECK(error_kind([&] { dilation::regular_type_constant(unit, 1.0); }) ==
        ErrorKind::DegenerateRegularity);
}

TEST_CASE("cayley examples") {
  const auto c = Contraction::validate(testutil::fix1());
  const auto ctx = decomposition::make_context(c, 1.0);
  const auto& d = ctx.dilation;
  ComplexMatrix expected(2, 2);
  expected << 4.0 / 3, 2.0 / 3, 2.0 / 3, 4.0 / 3;
  const ComplexMatrix u = dilation::cayley(d, 0.5, 0.0);
  CHECK(max_abs_diff(u, expected) < 1e-15);
  CHECK(max_abs_diff(dilation::cayley(d, 0.3, 0.3), ComplexMatrix::Identity(2, 2)) == 0.0);
  ComplexVector f(2);
  f << -0.5, 1.0;
  const ComplexVector g = u * f;
  CHECK(std::abs(g(0)) < 1e-15);
  CHECK(std::abs(g(1) - 1.0) < 1e-15);

  const auto r = dilation::cayley_lemma_residuals(d, ctx, 0.5, 0.0);
  CHECK(r.inv < 1e-15);
  CHECK(r.map_m < 1e-15);
  CHECK_FALSE(r.map_mperp.has_value());
  const auto r2 = dilation::cayley_lemma_residuals(d, ctx, 0.25, 0.25);
  CHECK(r2.inv == 0.0);
  CHECK(r2.map_m < 1e-15);
  REQUIRE(r2.map_mperp.has_value());
  CHECK(*r2.map_mperp < 1e-15);

  CHECK(error_kind([&] { dilation::cayley(d, 1.0, 0.0); }) == ErrorKind::SingularResolvent);
}

TEST_CASE("cayley agrees with the oracle on FIX2") {
  const auto ctx = decomposition::make_context(Contraction::validate(testutil::fix2()), 1.0);
  const auto m = oracle::make_model(testutil::to_oracle(testutil::fix2()), 1.0);
  const cplx z = 0.5, w = -1.0 / 3.0;
  CHECK(max_abs_diff(dilation::cayley(ctx.dilation, z, w),
                     testutil::from_oracle(oracle::cayley(m, z, w))) < 1e-13);
  const auto r = dilation::cayley_lemma_residuals(ctx.dilation, ctx, z, w);
  CHECK(r.inv <= 1e-10);
  CHECK(r.map_m <= 1e-10);
  REQUIRE(r.map_mperp.has_value());
  CHECK(*r.map_mperp <= 1e-10);
}

TEST_CASE("V0 isometry on random vectors") {
  std::mt19937_64 rng(4);
  const auto su = fixtures::generate(FixtureKind::scaled_unitary, 6, 3, 0.7);
  const auto d = dilation::build(Contraction::validate(su));
  CHECK(dilation::isometry_residual(d, testutil::random_matrix(rng, 6, 100)) <= 1e-12);
  CHECK(dilation::julia_unitarity_residual(d) <= 1e-10 * 6);
}
