// Model assembly (dispersion tables and coefficient vectors for every
// member) and the cubic nonlinearities: worked plane-wave values, gauge
// covariance, exact scaling powers, aliasing policies, and the fused
// right-hand side.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "dysthe/models.hpp"
#include "dysthe/rng.hpp"
#include "dysthe/spectral.hpp"
#include "dysthe/symbols.hpp"
#include "dysthe/transforms.hpp"

using namespace dysthe;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

GridPtr small2d() { return make_grid(32, 32, 2.0 * kPi, 2.0 * kPi); }

FieldState unit_wave(const GridPtr& g, int mx, int my) {
  FieldState f = FieldState::zeros(g, Rep::physical);
  const double kx = 2.0 * kPi * mx / g->Lx;
  const double ky = g->one_dim ? 0.0 : 2.0 * kPi * my / g->Ly;
  for (int ix = 0; ix < g->nx; ++ix) {
    for (int iy = 0; iy < g->ny; ++iy) {
      f.values[g->index(ix, iy)] = std::polar(
          1.0, kx * g->x[ix] + (g->one_dim ? 0.0 : ky * g->y[iy]));
    }
  }
  return f;
}

double max_diff(const FieldState& a, const FieldState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  }
  return m;
}

// Dispersion table versus a closed-form expression on every lattice point.
void check_omega(const ModelSpec& spec,
                 const std::function<double(double, double)>& expect) {
  const auto& g = *spec.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      const double want = expect(g.xi[ix], g.mu[iy]);
      const double got = spec.omega[g.index(ix, iy)];
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}
}  // namespace

TEST_CASE("normalized member: unit coefficients and w dispersion") {
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, small2d());
  CHECK(spec.c[0] == cplx(1.0));
  CHECK(spec.c[1] == cplx(1.0));
  CHECK(spec.c[2] == cplx(1.0));
  CHECK(spec.c[3] == cplx(1.0));
  CHECK(spec.nonlocal == NonlocalKind::riesz_x);
  check_omega(spec, [](double xi, double mu) { return w_symbol(xi, mu); });
  CHECK(!conserves_mass(spec));
}

TEST_CASE("deep-water member: alpha = (-1/16, 1/8, 1/2), c = (-2i, -6, 1, 2i)") {
  const ModelSpec spec = assemble(ModelKind::FullDysthe, {}, small2d());
  CHECK(spec.alpha[0] == -1.0 / 16.0);
  CHECK(spec.alpha[1] == 1.0 / 8.0);
  CHECK(spec.alpha[2] == 1.0 / 2.0);
  CHECK(spec.c[0] == -2.0 * kI);
  CHECK(spec.c[1] == cplx(-6.0));
  CHECK(spec.c[2] == cplx(1.0));
  CHECK(spec.c[3] == 2.0 * kI);
  CHECK(spec.nonlocal == NonlocalKind::riesz_x);
  check_omega(spec, [](double xi, double mu) {
    return omega_symbol(xi, mu, -1.0 / 16.0, 1.0 / 8.0, 1.0 / 2.0);
  });
  CHECK(conserves_mass(spec));
}

TEST_CASE("finite-depth member at omega0 = k0 = 1") {
  ModelParams p;
  p.omega0 = 1.0;
  p.k0 = 1.0;
  p.h = 0.8;
  const ModelSpec spec = assemble(ModelKind::FiniteDepthDysthe, p, small2d());
  CHECK(spec.c[0] == -0.5 * kI);
  CHECK(spec.c[1] == cplx(-1.5));
  CHECK(spec.c[2] == cplx(0.25));
  CHECK(spec.c[3] == -0.5 * kI);
  CHECK(spec.nonlocal == NonlocalKind::depth);
  CHECK(spec.h == 0.8);
  check_omega(spec, [](double xi, double mu) {
    return -0.5 * xi + 0.125 * xi * xi - 0.25 * mu * mu -
           xi * xi * xi / 16.0 + 6.0 / 16.0 * xi * mu * mu;
  });
  CHECK(conserves_mass(spec));
  // The scale parameters enter the coefficients polynomially.
  ModelParams p2;
  p2.omega0 = 2.0;
  p2.k0 = 3.0;
  const ModelSpec s2 = assemble(ModelKind::FiniteDepthDysthe, p2, small2d());
  CHECK(s2.c[0] == -0.5 * kI * 2.0 * 9.0);   // -(i/2) w0 k0^2
  CHECK(s2.c[1] == cplx(-1.5 * 2.0 * 3.0));  // -(3/2) w0 k0
  CHECK(s2.c[2] == cplx(0.25 * 2.0 * 3.0));  // (1/4) w0 k0
  CHECK(s2.c[3] == -0.5 * kI * 2.0 * 3.0);   // -(i/2) w0 k0
}

TEST_CASE("gravity-capillary member ties to the depth-ratio coefficients") {
  ModelParams p;
  p.kappa = 0.25;
  const ModelSpec spec = assemble(ModelKind::GravityCapillary, p, small2d());
  const KappaCoefficients kc = kappa_coefficients(0.25);
  CHECK(spec.c[0] == -0.5 * kI * kc.gamma);
  CHECK(spec.c[1] == cplx(0.5 * kc.v));
  CHECK(spec.c[2] == cplx(-0.5 * kc.u));
  CHECK(spec.c[3] == -0.5 * kI);  // gc_n4_scale = 1
  CHECK(spec.nonlocal == NonlocalKind::riesz_x);
  check_omega(spec, [&](double xi, double mu) {
    return 0.5 * kc.r * xi * xi * xi + 0.5 * kc.s * xi * mu * mu -
           0.5 * kc.p * xi * xi - 0.5 * kc.q * mu * mu -
           0.5 * kc.cg_factor * xi;
  });
  CHECK(conserves_mass(spec));
  // kappa = 0 linear part coincides with the finite-depth member at
  // omega0 = k0 = 1 (deep-water limit of the dispersion).
  const ModelSpec gc0 = assemble(ModelKind::GravityCapillary, {}, small2d());
  const ModelSpec fd =
      assemble(ModelKind::FiniteDepthDysthe, {}, small2d());
  for (std::size_t i = 0; i < gc0.omega.size(); ++i) {
    CHECK(std::abs(gc0.omega[i] - fd.omega[i]) < 1e-12);
  }
  CHECK_THROWS_AS(
      (void)assemble(ModelKind::GravityCapillary,
                     []{ ModelParams q; q.kappa = 0.5; return q; }(), small2d()),
      std::invalid_argument);
}

TEST_CASE("large-depth-ratio member: frozen limit coefficients") {
  const ModelSpec spec = assemble(ModelKind::KappaInfinity, {}, small2d());
  CHECK(spec.c[0] == kI / 16.0);
  CHECK(spec.c[1] == cplx(3.0 / 16.0));
  CHECK(spec.c[2] == cplx(-1.0 / 32.0));
  CHECK(spec.c[3] == -0.5 * kI);
  check_omega(spec, [](double xi, double mu) {
    return -1.5 * xi - 0.375 * xi * xi - 0.75 * mu * mu +
           xi * xi * xi / 16.0 + 0.375 * xi * mu * mu;
  });
  CHECK(conserves_mass(spec));
}

TEST_CASE("one-dimensional member needs a 1D grid (and vice versa)") {
  const GridPtr g1 = make_grid_1d(32, 4.0 * kPi);
  ModelParams p;
  p.h = 2.0;
  const ModelSpec spec = assemble(ModelKind::Dysthe1D, p, g1);
  CHECK(spec.c[0] == -0.5 * kI);
  CHECK(spec.nonlocal == NonlocalKind::depth);
  check_omega(spec, [](double xi, double /*mu*/) {
    return -xi * xi * xi / 16.0 + 0.125 * xi * xi - 0.5 * xi;
  });
  CHECK_THROWS_AS((void)assemble(ModelKind::Dysthe1D, {}, small2d()),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)assemble(ModelKind::NormalizedDysthe, {}, g1),
                  std::invalid_argument);
}

TEST_CASE("extended-dispersion member: fourth/fifth order terms") {
  const ModelSpec spec = assemble(ModelKind::TrulsenDysthe, {}, small2d());
  CHECK(spec.c[0] == -0.5 * kI);
  CHECK(spec.c[1] == cplx(-1.5));
  CHECK(spec.c[2] == cplx(0.25));
  CHECK(spec.c[3] == -0.5 * kI);
  check_omega(spec, [](double xi, double mu) {
    const double xi2 = xi * xi, mu2 = mu * mu;
    return -0.5 * xi + 0.125 * xi2 - 0.25 * mu2 - xi * xi2 / 16.0 +
           0.375 * xi * mu2 + 5.0 / 128.0 * xi2 * xi2 -
           15.0 / 32.0 * xi2 * mu2 + 3.0 / 32.0 * mu2 * mu2 -
           7.0 / 256.0 * xi2 * xi2 * xi + 35.0 / 64.0 * xi2 * xi * mu2 -
           21.0 / 64.0 * xi * mu2 * mu2;
  });
  CHECK(conserves_mass(spec));
}

TEST_CASE("overrides: alpha only for the normal-form members, c for all") {
  ModelParams p;
  p.alpha = std::array<double, 3>{2.0, 1.0, 1.0};
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, p, small2d());
  check_omega(spec, [](double xi, double mu) {
    return omega_symbol(xi, mu, 2.0, 1.0, 1.0);
  });
  CHECK_THROWS_AS(
      (void)assemble(ModelKind::FiniteDepthDysthe, p, small2d()),
      std::invalid_argument);
  ModelParams pc;
  pc.c = std::array<cplx, 4>{cplx(0.0), cplx(0.5), cplx(-0.5), cplx(0.0)};
  const ModelSpec sc = assemble(ModelKind::TrulsenDysthe, pc, small2d());
  CHECK(sc.c[1] == cplx(0.5));
  CHECK(sc.c[0] == cplx(0.0));
}

TEST_CASE("worked nonlinearities on the unit plane wave") {
  // u = e^{ix}: |u|^2 = 1, d_x u = i u, so
  //   N1 = u, N2 = i u, N3 = -i u, N4 = u d_x G(1) = 0.
  const GridPtr g = small2d();
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, g);
  const FieldState u = unit_wave(g, 1, 0);
  const FieldState n1 = to_physical(nonlinear_term(spec, u, 1));
  const FieldState n2 = to_physical(nonlinear_term(spec, u, 2));
  const FieldState n3 = to_physical(nonlinear_term(spec, u, 3));
  const FieldState n4 = to_physical(nonlinear_term(spec, u, 4));
  FieldState iu = u;
  FieldState miu = u;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    iu.values[i] *= kI;
    miu.values[i] *= -kI;
  }
  CHECK(max_diff(n1, u) < 1e-12);
  CHECK(max_diff(n2, iu) < 1e-12);
  CHECK(max_diff(n3, miu) < 1e-12);
  double m4 = 0.0;
  for (const auto& v : n4.values) m4 = std::max(m4, std::abs(v));
  CHECK(m4 < 1e-12);
  CHECK_THROWS_AS((void)nonlinear_term(spec, u, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)nonlinear_term(spec, u, 0), std::invalid_argument);
}

TEST_CASE("gauge covariance: N_j(e^{i theta} u) = e^{i theta} N_j(u)") {
  const GridPtr g = small2d();
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, g);
  FieldState u = random_field(g, 5, 1);
  for (auto& v : u.values) v *= 0.3;
  const cplx phase = std::polar(1.0, 1.2345);
  FieldState up = u;
  for (auto& v : up.values) v *= phase;
  for (int j = 1; j <= 4; ++j) {
    const FieldState a = to_physical(nonlinear_term(spec, up, j));
    FieldState b = to_physical(nonlinear_term(spec, u, j));
    for (auto& v : b.values) v *= phase;
    CHECK(max_diff(a, b) < 1e-12);
  }
}

TEST_CASE("exact lattice scaling powers: lambda^3 for N1, lambda^4 above") {
  const GridPtr g = small2d();
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, g);
  FieldState u = random_field(g, 9, 2);
  for (auto& v : u.values) v *= 0.2;
  u = to_physical(to_spectral(u));  // Nyquist-free physical data
  const double lambda = 2.0;
  const FieldState us = scale_field(u, lambda);
  const ModelSpec spec_s = assemble(ModelKind::NormalizedDysthe, {}, us.grid);
  for (int j = 1; j <= 4; ++j) {
    // N_j(lambda u(lambda .)) = lambda^p N_j(u)(lambda .) with p = 3 for
    // the power nonlinearity and p = 4 for the derivative ones, i.e.
    // N_j(scale u) = lambda^{p-1} scale(N_j(u)).
    const double power = (j == 1) ? 2.0 : 3.0;
    const FieldState left = to_physical(nonlinear_term(spec_s, us, j));
    FieldState right =
        scale_field(to_physical(nonlinear_term(spec, u, j)), lambda);
    for (auto& v : right.values) v *= std::pow(lambda, power);
    CHECK(max_diff(left, right) < 1e-11);
  }
}

TEST_CASE("exact padded products match truncation on band-limited data") {
  // Data limited to |j| <= 5 on n = 48: the cubic stays inside |j| <= 15
  // < 48/3, so the 2/3-rule truncation removes nothing and the two product
  // policies agree exactly.
  const GridPtr g = make_grid(48, 48, 2.0 * kPi, 2.0 * kPi);
  FieldState u = random_annulus_field(g, 3, 0, 0.0, 5.0);
  for (auto& v : u.values) v *= 0.2;
  ModelParams exact;
  exact.exact_products = true;
  ModelParams trunc;
  const ModelSpec se = assemble(ModelKind::NormalizedDysthe, exact, g);
  const ModelSpec st = assemble(ModelKind::NormalizedDysthe, trunc, g);
  for (int j = 1; j <= 4; ++j) {
    const FieldState a = to_physical(nonlinear_term(se, u, j));
    const FieldState b = to_physical(nonlinear_term(st, u, j));
    CHECK(max_diff(a, b) < 1e-12);
  }
}

TEST_CASE("fused right-hand side equals the per-term sum") {
  const GridPtr g = small2d();
  const ModelSpec spec = assemble(ModelKind::FullDysthe, {}, g);
  FieldState u = to_spectral(random_field(g, 21, 4));
  for (auto& v : u.values) v *= 0.1;
  const FieldState fused = nonlinear_rhs(spec, u);
  FieldState sum = FieldState::zeros(g, Rep::spectral);
  for (int j = 1; j <= 4; ++j) {
    const FieldState term = nonlinear_term(spec, u, j);
    for (std::size_t i = 0; i < sum.values.size(); ++i) {
      sum.values[i] += spec.c[static_cast<std::size_t>(j - 1)] * term.values[i];
    }
  }
  CHECK(max_diff(fused, sum) < 1e-13);
}

TEST_CASE("model names round-trip") {
  for (ModelKind kind :
       {ModelKind::NormalizedDysthe, ModelKind::FullDysthe,
        ModelKind::FiniteDepthDysthe, ModelKind::GravityCapillary,
        ModelKind::KappaInfinity, ModelKind::Dysthe1D,
        ModelKind::TrulsenDysthe}) {
    CHECK(model_kind_from_string(model_name(kind)) == kind);
  }
  CHECK_THROWS_AS((void)model_kind_from_string("no-such-model"),
                  std::invalid_argument);
}
