#include "dysthe/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dysthe/spectral.hpp"

namespace dysthe {
namespace {

// Periodic translation x -> x + s, exact on the band via spectral phases.
FieldState translate_x(const FieldState& f, double s) {
  FieldState hat = to_spectral(f);
  const auto& g = *hat.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    const cplx phase = std::polar(1.0, g.xi[ix] * s);
    for (int iy = 0; iy < g.ny; ++iy) hat.values[g.index(ix, iy)] *= phase;
  }
  return hat;
}

// Pointwise phase e^{i (a2 x + extra)} applied to physical samples.
FieldState modulate_x(const FieldState& f, double a2, double extra) {
  FieldState phys = to_physical(f);
  const auto& g = *phys.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    const cplx phase = std::polar(1.0, a2 * g.x[ix] + extra);
    for (int iy = 0; iy < g.ny; ++iy) phys.values[g.index(ix, iy)] *= phase;
  }
  return phys;
}

void require_carrier(const CovCoefficients& cov, const SpectralGrid& grid) {
  if (!on_frequency_lattice(cov.a2, grid.Lx)) {
    throw std::invalid_argument(
        "change of variables: the carrier a2 = alpha2 / (3 alpha1) must be an "
        "integer multiple of 2 pi / Lx for the modulated field to stay "
        "periodic; adjust the box length");
  }
}

}  // namespace

CovCoefficients cov_coefficients(double alpha1, double alpha2, double alpha3) {
  if (alpha1 == 0.0) {
    throw std::invalid_argument(
        "change of variables: alpha1 must be nonzero");
  }
  CovCoefficients cov;
  cov.a1 = alpha2 * alpha2 / (3.0 * alpha1 * alpha1) + alpha3 / alpha1;
  cov.a2 = alpha2 / (3.0 * alpha1);
  cov.a3 = alpha2 * alpha3 / (3.0 * alpha1 * alpha1) +
           (2.0 / 27.0) * alpha2 * alpha2 * alpha2 / (alpha1 * alpha1 * alpha1);
  return cov;
}

FieldState apply_cov(const FieldState& v, const std::array<double, 3>& alpha) {
  check_field(v);
  const CovCoefficients cov = cov_coefficients(alpha[0], alpha[1], alpha[2]);
  require_carrier(cov, *v.grid);
  const bool was_spectral = (v.rep == Rep::spectral);
  const double tu = alpha[0] * v.time;
  const double shift = cov.a1 * tu;
  FieldState out = translate_x(v, shift);
  out = modulate_x(out, cov.a2, cov.a2 * shift - cov.a3 * tu);
  out.time = tu;
  return was_spectral ? to_spectral(out) : out;
}

FieldState apply_cov_inverse(const FieldState& u,
                             const std::array<double, 3>& alpha) {
  check_field(u);
  const CovCoefficients cov = cov_coefficients(alpha[0], alpha[1], alpha[2]);
  require_carrier(cov, *u.grid);
  const bool was_spectral = (u.rep == Rep::spectral);
  const double tu = u.time;
  const double shift = cov.a1 * tu;
  FieldState out = translate_x(u, -shift);
  out = modulate_x(out, -cov.a2, cov.a3 * tu);
  out.time = tu / alpha[0];
  return was_spectral ? to_spectral(out) : out;
}

std::array<cplx, 4> remap_nonlinear_coeffs(const std::array<cplx, 4>& c,
                                           double a2cov, double alpha1) {
  if (alpha1 == 0.0) {
    throw std::invalid_argument("coefficient remap: alpha1 must be nonzero");
  }
  const cplx i(0.0, 1.0);
  const double inv = 1.0 / alpha1;
  return {inv * (c[0] - i * a2cov * c[1] + i * a2cov * c[2]), inv * c[1],
          inv * c[2], inv * c[3]};
}

FieldState scale_field(const FieldState& f, double lambda) {
  check_field(f);
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("scaling: lambda must be positive");
  }
  const bool was_spectral = (f.rep == Rep::spectral);
  FieldState phys = to_physical(f);
  const auto& g = *f.grid;
  FieldState out;
  out.grid = g.one_dim ? make_grid_1d(g.nx, g.Lx / lambda)
                       : make_grid(g.nx, g.ny, g.Lx / lambda, g.Ly / lambda);
  out.rep = Rep::physical;
  out.time = f.time;
  out.values = phys.values;
  for (cplx& v : out.values) v *= lambda;
  return was_spectral ? to_spectral(out) : out;
}

FieldState space_reversal_conj(const FieldState& f) {
  check_field(f);
  const bool was_spectral = (f.rep == Rep::spectral);
  const FieldState phys = to_physical(f);
  const auto& g = *f.grid;
  FieldState out = phys;
  for (int ix = 0; ix < g.nx; ++ix) {
    const int rx = (g.nx - ix) % g.nx;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int ry = (g.ny - iy) % g.ny;
      out.values[g.index(ix, iy)] = std::conj(phys.values[g.index(rx, ry)]);
    }
  }
  return was_spectral ? to_spectral(out) : out;
}

std::array<cplx, 4> time_reversal_coeffs(const std::array<cplx, 4>& c) {
  return {-std::conj(c[0]), std::conj(c[1]), std::conj(c[2]),
          -std::conj(c[3])};
}

bool on_frequency_lattice(double a, double L, double tol) {
  if (!(L > 0.0)) {
    throw std::invalid_argument("frequency lattice: box length must be positive");
  }
  const double m = a * L / (2.0 * std::numbers::pi);
  return std::fabs(m - std::round(m)) <= tol;
}

}  // namespace dysthe
