// Symmetry maps: Galilean-type change of variables, scaling, and reversals.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "dysthe/evolve.hpp"
#include "dysthe/field.hpp"
#include "dysthe/grid.hpp"
#include "dysthe/models.hpp"
#include "dysthe/norms.hpp"
#include "dysthe/rng.hpp"
#include "dysthe/spectral.hpp"
#include "dysthe/transforms.hpp"

using namespace dysthe;

namespace {
constexpr double kPi = std::numbers::pi;

// Spectral field with a few hand-placed low modes (exactly band-limited).
FieldState low_mode_field(const GridPtr& g, double t = 0.0) {
  FieldState f = FieldState::zeros(g, Rep::spectral);
  auto set = [&](int mx, int my, cplx a) {
    const int ix = (mx % g->nx + g->nx) % g->nx;
    const int iy = g->one_dim ? 0 : (my % g->ny + g->ny) % g->ny;
    f.values[g->index(ix, iy)] = a;
  };
  set(0, 0, cplx(0.3, -0.1));
  set(3, -2, cplx(1.0, 0.5));
  set(-1, 1, cplx(-0.25, 0.75));
  set(5, 4, cplx(0.0, -0.6));
  f.time = t;
  return f;
}

// Exactly band-limited random data of prescribed L2 size: with support well
// inside the dealiasing band, the one-mode carrier shift of the change of
// variables cannot push content across the band edge or onto the Nyquist
// lines, so both sides of an equivalence test see identical truncations.
FieldState narrow_band_data(const GridPtr& g, std::uint64_t seed, double size) {
  FieldState f = random_annulus_field(g, seed, 0, 0.0, 0.5);
  const double n = l2_norm(f);
  for (cplx& z : f.values) z *= size / n;
  return f;
}

double rel_l2_diff(const FieldState& a, const FieldState& b) {
  FieldState d = to_spectral(a);
  const FieldState bs = to_spectral(b);
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= bs.values[i];
  return l2_norm(d) / l2_norm(bs);
}
}  // namespace

TEST_CASE("cov coefficients: frozen worked examples") {
  // alpha = (1, 3, 0): a1 = 9/3 = 3, a2 = 3/3 = 1, a3 = (2/27)*27 = 2.
  const CovCoefficients c1 = cov_coefficients(1.0, 3.0, 0.0);
  CHECK(c1.a1 == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(c1.a2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c1.a3 == doctest::Approx(2.0).epsilon(1e-15));

  // alpha = (2, 3, 1): a1 = 9/12 + 1/2, a2 = 3/6, a3 = 3/12 + (2/27)(27/8).
  const CovCoefficients c2 = cov_coefficients(2.0, 3.0, 1.0);
  CHECK(c2.a1 == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(c2.a2 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c2.a3 == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(cov_coefficients(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("coefficient remap: frozen example and alpha1 division") {
  const std::array<cplx, 4> c = {cplx(1.0), cplx(2.0), cplx(0.0, 3.0),
                                 cplx(4.0)};
  // a2 = 1/6, alpha1 = 2:
  //   c1' = (1 - i(1/6)*2 + i(1/6)*3i)/2 = (1/2 - i/3)/2 = 1/4 - i/6.
  const std::array<cplx, 4> r = remap_nonlinear_coeffs(c, 1.0 / 6.0, 2.0);
  CHECK(std::abs(r[0] - cplx(0.25, -1.0 / 6.0)) < 1e-15);
  CHECK(std::abs(r[1] - cplx(1.0)) < 1e-15);
  CHECK(std::abs(r[2] - cplx(0.0, 1.5)) < 1e-15);
  CHECK(std::abs(r[3] - cplx(2.0)) < 1e-15);

  // With a2 = 0 and alpha1 = 1 the remap is the identity.
  const std::array<cplx, 4> id = remap_nonlinear_coeffs(c, 0.0, 1.0);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(id[j] - c[j]) < 1e-15);

  CHECK_THROWS_AS(remap_nonlinear_coeffs(c, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("apply_cov / apply_cov_inverse round trip at nonzero time") {
  const GridPtr g = make_grid(32, 32, 12.0 * kPi, 12.0 * kPi);
  const std::array<double, 3> alpha = {2.0, 1.0, 1.0};  // a2 = 1/6 on-lattice
  const FieldState v0 = low_mode_field(g, 0.3);

  const FieldState u = apply_cov(v0, alpha);
  CHECK(u.time == doctest::Approx(0.6).epsilon(1e-15));

  const FieldState back = apply_cov_inverse(u, alpha);
  CHECK(back.time == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(rel_l2_diff(back, v0) < 1e-13);
}

TEST_CASE("apply_cov rejects a carrier off the frequency lattice") {
  const GridPtr g = make_grid(16, 16, 7.0, 7.0);
  // alpha = (1, 3, 0) gives a2 = 1, not a multiple of 2 pi / 7.
  const FieldState v = low_mode_field(g);
  CHECK_THROWS_AS(apply_cov(v, {1.0, 3.0, 0.0}), std::invalid_argument);
}

TEST_CASE("apply_cov intertwines the free flows (general alpha -> reduced)") {
  const GridPtr g = make_grid(32, 32, 12.0 * kPi, 12.0 * kPi);
  const std::array<double, 3> alpha = {2.0, 3.0, 1.0};  // a2 = 1/2 on-lattice

  ModelParams pv;
  pv.alpha = std::array<double, 3>{alpha[0], alpha[1], alpha[2]};
  const ModelSpec spec_v = assemble(ModelKind::NormalizedDysthe, pv, g);
  const ModelSpec spec_u = assemble(ModelKind::NormalizedDysthe, {}, g);

  const double t0 = 0.3;
  const double dt = 0.7;
  const FieldState v0 = low_mode_field(g, t0);

  const FieldState lhs = apply_cov(linear_propagate(spec_v, v0, dt), alpha);
  const FieldState rhs =
      linear_propagate(spec_u, apply_cov(v0, alpha), alpha[0] * dt);

  CHECK(lhs.time == doctest::Approx(alpha[0] * (t0 + dt)).epsilon(1e-14));
  CHECK(rhs.time == doctest::Approx(alpha[0] * (t0 + dt)).epsilon(1e-14));
  CHECK(rel_l2_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("apply_cov + coefficient remap intertwine the nonlinear flows") {
  const GridPtr g = make_grid(32, 32, 12.0 * kPi, 12.0 * kPi);
  const std::array<double, 3> alpha = {2.0, 1.0, 1.0};  // a2 = 1/6
  const CovCoefficients cov = cov_coefficients(alpha[0], alpha[1], alpha[2]);

  const std::array<cplx, 4> cv = {cplx(0.0, 0.1), cplx(0.1), cplx(-0.1),
                                  cplx(0.0, 0.1)};
  ModelParams pv;
  pv.alpha = std::array<double, 3>{alpha[0], alpha[1], alpha[2]};
  pv.c = cv;
  const ModelSpec spec_v = assemble(ModelKind::NormalizedDysthe, pv, g);

  ModelParams pu;
  pu.c = remap_nonlinear_coeffs(cv, cov.a2, alpha[0]);
  const ModelSpec spec_u = assemble(ModelKind::NormalizedDysthe, pu, g);

  const FieldState v0 = narrow_band_data(g, 16, 0.05);

  EvolveOptions ov;
  ov.dt = 2e-3;
  ov.T = 0.02;
  const FieldState vT = evolve(spec_v, v0, ov).snapshots.back();

  EvolveOptions ou;
  ou.dt = alpha[0] * ov.dt;
  ou.T = alpha[0] * ov.T;
  const FieldState uT = evolve(spec_u, apply_cov(v0, alpha), ou).snapshots.back();

  CHECK(rel_l2_diff(apply_cov(vT, alpha), uT) < 1e-9);
}

TEST_CASE("scale_field: sample values, box size, and L2 behavior") {
  const GridPtr g2 = make_grid(16, 16, 8.0, 4.0);
  FieldState f = random_annulus_field(g2, 11, 0, 0.0, 4.0);
  f = to_physical(f);

  const FieldState s = scale_field(f, 2.0);
  CHECK(s.grid->Lx == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(s.grid->Ly == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    CHECK(std::abs(s.values[i] - 2.0 * f.values[i]) < 1e-15);
  }
  // In two dimensions lambda u(lambda x) preserves the L2 norm exactly.
  CHECK(l2_norm(s) == doctest::Approx(l2_norm(f)).epsilon(1e-13));

  // In one dimension the same map multiplies the L2 norm by sqrt(lambda).
  const GridPtr g1 = make_grid_1d(32, 10.0);
  FieldState h = to_physical(random_annulus_field(g1, 12, 0, 0.0, 5.0));
  const FieldState s1 = scale_field(h, 2.0);
  CHECK(l2_norm(s1) ==
        doctest::Approx(std::sqrt(2.0) * l2_norm(h)).epsilon(1e-13));

  CHECK_THROWS_AS(scale_field(h, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_field(h, -1.0), std::invalid_argument);
}

TEST_CASE("space reversal: samples, involution, spectral conjugation") {
  const GridPtr g = make_grid(8, 8, 2.0 * kPi, 2.0 * kPi);
  FieldState f = to_physical(random_annulus_field(g, 13, 0, 0.0, 3.0));

  const FieldState r = space_reversal_conj(f);
  // (S f)(x_i, y_j) = conj(f(-x_i, -y_j)); index 0 maps to itself.
  CHECK(std::abs(r.values[g->index(0, 0)] -
                 std::conj(f.values[g->index(0, 0)])) < 1e-15);
  CHECK(std::abs(r.values[g->index(3, 5)] -
                 std::conj(f.values[g->index(5, 3)])) < 1e-15);

  const FieldState rr = space_reversal_conj(r);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    CHECK(std::abs(rr.values[i] - f.values[i]) < 1e-14);
  }

  // Spectrally the map conjugates each coefficient in place.
  const FieldState fh = to_spectral(f);
  const FieldState rh = to_spectral(r);
  for (std::size_t i = 0; i < fh.values.size(); ++i) {
    CHECK(std::abs(rh.values[i] - std::conj(fh.values[i])) < 1e-13);
  }
}

TEST_CASE("time reversal coefficients: frozen map and fixed points") {
  const std::array<cplx, 4> c = {cplx(1.0, 2.0), cplx(3.0, -1.0),
                                 cplx(0.0, 4.0), cplx(-2.0, 5.0)};
  const std::array<cplx, 4> r = time_reversal_coeffs(c);
  CHECK(std::abs(r[0] - cplx(-1.0, 2.0)) < 1e-15);
  CHECK(std::abs(r[1] - cplx(3.0, 1.0)) < 1e-15);
  CHECK(std::abs(r[2] - cplx(0.0, -4.0)) < 1e-15);
  CHECK(std::abs(r[3] - cplx(2.0, 5.0)) < 1e-15);

  // Members with imaginary c1, c4 and real c2, c3 are reversal-invariant.
  const ModelSpec fd = assemble(ModelKind::FullDysthe, {}, make_grid(8, 8, 2 * kPi, 2 * kPi));
  const std::array<cplx, 4> rf = time_reversal_coeffs(fd.c);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(rf[j] - fd.c[j]) < 1e-15);
}

TEST_CASE("time reversal: vector-field identity N_{c'}(S v) = -S N_c(v)") {
  const GridPtr g = make_grid(32, 32, 4.0 * kPi, 4.0 * kPi);

  auto check_member = [&](const ModelSpec& spec) {
    ModelParams pr = spec.params;
    pr.c = time_reversal_coeffs(spec.c);
    const ModelSpec rev = assemble(spec.kind, pr, g);

    const FieldState v = random_annulus_field(g, 14, 0, 0.0, 4.0);
    const FieldState lhs = nonlinear_rhs(rev, space_reversal_conj(v));
    FieldState rhs = space_reversal_conj(nonlinear_rhs(spec, v));
    for (cplx& z : rhs.values) z = -z;

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lhs.values.size(); ++i) {
      num += std::norm(lhs.values[i] - rhs.values[i]);
      den += std::norm(rhs.values[i]);
    }
    CHECK(std::sqrt(num / den) < 5e-13);
  };

  // Mixed-sign complex coefficients over the Riesz-type nonlocal term.
  ModelParams pa;
  pa.c = std::array<cplx, 4>{cplx(0.3, -1.2), cplx(-0.7, 0.4), cplx(1.1, 0.9),
                             cplx(-0.2, 0.8)};
  check_member(assemble(ModelKind::NormalizedDysthe, pa, g));

  // Finite-depth nonlocal term (depth-dependent symbol).
  ModelParams pb;
  pb.h = 1.3;
  check_member(assemble(ModelKind::FiniteDepthDysthe, pb, g));
}

TEST_CASE("linear flow intertwines with space reversal via negative time") {
  const GridPtr g = make_grid(16, 16, 2.0 * kPi, 2.0 * kPi);
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, g);
  const FieldState v = random_annulus_field(g, 15, 0, 0.0, 5.0);

  const FieldState lhs = linear_propagate(spec, space_reversal_conj(v), 0.4);
  const FieldState rhs =
      space_reversal_conj(linear_propagate(spec, v, -0.4));
  CHECK(rel_l2_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("on_frequency_lattice accepts exact multiples only") {
  CHECK(on_frequency_lattice(1.0 / 6.0, 12.0 * kPi));
  CHECK(on_frequency_lattice(-0.5, 12.0 * kPi));
  CHECK(on_frequency_lattice(0.0, 5.0));
  CHECK(on_frequency_lattice(3.0, 2.0 * kPi));
  CHECK_FALSE(on_frequency_lattice(1.0 / 6.0, 2.0 * kPi));
  CHECK_FALSE(on_frequency_lattice(1.0, 7.0));
}
