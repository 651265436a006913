#include "dysthe/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dysthe/fft.hpp"
#include "dysthe/symbols.hpp"

namespace dysthe {
namespace {

constexpr double kPlateau = 1.25;  // eta == 1 on [-5/4, 5/4]
constexpr double kSupport = 1.6;   // eta == 0 outside (-8/5, 8/5)

// Smooth step built from the exp(-1/x) mollifier: 0 for x <= 0, 1 for x >= 1.
double glue(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

bool is_dyadic(double n) {
  if (!(n >= 1.0)) return false;
  double m = 1.0;
  while (m < n) m *= 2.0;
  return m == n;
}

void zero_nyquist(FieldState& f) {
  const auto& g = *f.grid;
  for (int iy = 0; iy < g.ny; ++iy) f.values[g.index(g.nx / 2, iy)] = 0.0;
  if (!g.one_dim) {
    for (int ix = 0; ix < g.nx; ++ix) f.values[g.index(ix, g.ny / 2)] = 0.0;
  }
}

// The physical samples start at -L/2 rather than at 0, half a period away
// from the index origin the DFT sums over.  Coefficients of the lattice
// waves e^{i(xi x + mu y)} therefore differ from the raw DFT output by
// (-1)^{mx+my}; for even nx, ny that parity equals the parity of the array
// index, so the correction is the same sign mask in both directions.
void apply_center_phase(std::vector<cplx>& v, const SpectralGrid& g) {
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = (ix % 2 == 0) ? 1 : 0; iy < g.ny; iy += 2) {
      v[g.index(ix, iy)] = -v[g.index(ix, iy)];
    }
  }
}

// Applies a real weight on the spectrum, preserving the representation.
template <typename Weight>
FieldState weight_spectrum(const FieldState& f, const Weight& weight) {
  check_field(f);
  const bool was_physical = (f.rep == Rep::physical);
  FieldState work = was_physical ? to_spectral(f) : f;
  const auto& g = *work.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      work.values[g.index(ix, iy)] *= weight(ix, iy);
    }
  }
  return was_physical ? to_physical(work) : work;
}

}  // namespace

double eta_bump(double r) {
  const double ar = std::fabs(r);
  if (ar <= kPlateau) return 1.0;
  if (ar >= kSupport) return 0.0;
  return glue((kSupport - ar) / (kSupport - kPlateau));
}

double phi_bump(double r) { return eta_bump(r) - eta_bump(2.0 * r); }

double shell_weight(double N, double r) {
  if (!is_dyadic(N)) {
    throw std::invalid_argument("shell weight: N must be 1 or a power of two");
  }
  if (N == 1.0) return eta_bump(r);
  return phi_bump(r / N);
}

FieldState spectral_transform(const FieldState& f, Rep target) {
  check_field(f);
  if (f.rep == target) {
    throw std::invalid_argument(
        "spectral transform: field is already in the requested representation");
  }
  FieldState out = f;
  out.rep = target;
  const auto& g = *f.grid;
  if (target == Rep::spectral) {
    detail::dft2(f.values.data(), out.values.data(), g.nx, g.ny, -1);
    apply_center_phase(out.values, g);
    zero_nyquist(out);
  } else {
    std::vector<cplx> shifted = f.values;
    apply_center_phase(shifted, g);
    detail::dft2(shifted.data(), out.values.data(), g.nx, g.ny, +1);
  }
  return out;
}

FieldState to_spectral(const FieldState& f) {
  if (f.rep == Rep::spectral) return f;
  return spectral_transform(f, Rep::spectral);
}

FieldState to_physical(const FieldState& f) {
  if (f.rep == Rep::physical) return f;
  return spectral_transform(f, Rep::physical);
}

FieldState apply_multiplier(const FieldState& f,
                            const std::function<cplx(double, double)>& m) {
  if (!m) throw std::invalid_argument("apply multiplier: missing symbol");
  check_field(f);
  const bool was_physical = (f.rep == Rep::physical);
  FieldState work = was_physical ? to_spectral(f) : f;
  const auto& g = *work.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      work.values[g.index(ix, iy)] *= m(g.xi[ix], g.mu[iy]);
    }
  }
  return was_physical ? to_physical(work) : work;
}

FieldState dealias(const FieldState& f) {
  const auto& g = *f.grid;
  const int nx = g.nx;
  const int ny = g.ny;
  return weight_spectrum(f, [nx, ny](int ix, int iy) -> double {
    const int jx = ix < nx / 2 ? ix : ix - nx;
    const int jy = ny == 1 ? 0 : (iy < ny / 2 ? iy : iy - ny);
    return (3 * std::abs(jx) > nx || 3 * std::abs(jy) > ny) ? 0.0 : 1.0;
  });
}

FieldState lp_project(const FieldState& f, double N) {
  if (!is_dyadic(N)) {
    throw std::invalid_argument(
        "littlewood-paley projection: N must be 1 or a power of two");
  }
  const auto& g = *f.grid;
  return weight_spectrum(f, [&g, N](int ix, int iy) {
    return shell_weight(N, std::hypot(g.xi[ix], g.mu[iy]));
  });
}

double lp_cover_max(const SpectralGrid& grid) {
  const double rmax = grid.max_radius();
  double N = 1.0;
  while (rmax > kPlateau * N) N *= 2.0;
  return N;
}

SpaceTimeField modulation_project(const SpaceTimeField& u, double L) {
  if (!is_dyadic(L)) {
    throw std::invalid_argument(
        "modulation projection: L must be 1 or a power of two");
  }
  check_field(u);
  const double spacing = tau_spacing(u);
  if (spacing > kPlateau) {
    std::fprintf(stderr,
                 "modulation projection: tau spacing %g exceeds the lowest "
                 "band plateau %g; lengthen the time window\n",
                 spacing, kPlateau);
  }
  const auto& g = *u.grid;
  SpaceTimeField out = u;
  std::vector<cplx> hat(u.values.size());
  detail::dft3(u.values.data(), hat.data(), u.nt, g.nx, g.ny, -1);
  for (int it = 0; it < u.nt; ++it) {
    const int mt = it < (u.nt + 1) / 2 ? it : it - u.nt;
    const double tau = spacing * mt;
    const std::size_t base = u.slice_offset(it);
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        cplx& v = hat[base + g.index(ix, iy)];
        if (g.is_nyquist(ix, iy)) {
          v = 0.0;
        } else {
          v *= shell_weight(L, tau - w_symbol(g.xi[ix], g.mu[iy]));
        }
      }
    }
  }
  detail::dft3(hat.data(), out.values.data(), u.nt, g.nx, g.ny, +1);
  return out;
}

double modulation_cover_max(const SpaceTimeField& u) {
  check_field(u);
  const auto& g = *u.grid;
  const double spacing = tau_spacing(u);
  double worst = 0.0;
  for (int it = 0; it < u.nt; ++it) {
    const int mt = it < (u.nt + 1) / 2 ? it : it - u.nt;
    const double tau = spacing * mt;
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        if (g.is_nyquist(ix, iy)) continue;
        worst = std::max(worst,
                         std::fabs(tau - w_symbol(g.xi[ix], g.mu[iy])));
      }
    }
  }
  double L = 1.0;
  while (worst > kPlateau * L) L *= 2.0;
  return L;
}

double tau_spacing(const SpaceTimeField& u) {
  check_field(u);
  return 2.0 * std::numbers::pi / u.window;
}

}  // namespace dysthe
