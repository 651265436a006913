#include "dysthe/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dysthe/fft.hpp"
#include "dysthe/spectral.hpp"
#include "dysthe/symbols.hpp"

namespace dysthe {
namespace {

bool is_inf(double p) { return p == kInfExponent; }

void require_exponent(double p) {
  if (!is_inf(p) && !(p > 0.0)) {
    throw std::invalid_argument(
        "norm: exponent must be positive (or the infinity sentinel)");
  }
}

// Discrete l^q aggregation of |values| with uniform weight `measure`.
double aggregate(const std::vector<double>& magnitudes, double q,
                 double measure) {
  if (is_inf(q)) {
    double m = 0.0;
    for (double v : magnitudes) m = std::max(m, v);
    return m;
  }
  double sum = 0.0;
  for (double v : magnitudes) sum += std::pow(v, q);
  return std::pow(sum * measure, 1.0 / q);
}

}  // namespace

double lq_norm(const FieldState& f, double q) {
  require_exponent(q);
  const FieldState phys = to_physical(f);
  std::vector<double> mags(phys.values.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(phys.values[i]);
  return aggregate(mags, q, phys.grid->cell_area());
}

double mass(const FieldState& f) {
  check_field(f);
  // Unitary transforms make the sum representation-independent.
  double sum = 0.0;
  for (const cplx& v : f.values) sum += std::norm(v);
  return sum * f.grid->cell_area();
}

double l2_norm(const FieldState& f) { return std::sqrt(mass(f)); }

double sobolev_norm(const FieldState& f, double s) {
  const FieldState hat = to_spectral(f);
  const auto& g = *hat.grid;
  double sum = 0.0;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      const double r2 = g.xi[ix] * g.xi[ix] + g.mu[iy] * g.mu[iy];
      sum += std::pow(1.0 + r2, s) * std::norm(hat.values[g.index(ix, iy)]);
    }
  }
  return std::sqrt(sum * g.cell_area());
}

double mixed_norm(const SpaceTimeField& u, double p, double q) {
  check_field(u);
  require_exponent(p);
  require_exponent(q);
  FieldState slice;
  slice.grid = u.grid;
  slice.rep = Rep::physical;
  std::vector<double> per_slice(static_cast<std::size_t>(u.nt));
  for (int it = 0; it < u.nt; ++it) {
    const std::size_t base = u.slice_offset(it);
    slice.time = u.time_of(it);
    slice.values.assign(u.values.begin() + base,
                        u.values.begin() + base + u.grid->size());
    per_slice[static_cast<std::size_t>(it)] = lq_norm(slice, q);
  }
  return aggregate(per_slice, p, u.dt());
}

double mixed_norm(const FieldState& u, double /*p*/, double q) {
  return lq_norm(u, q);
}

double xsb_norm(const SpaceTimeField& u, double s, double b) {
  check_field(u);
  const auto& g = *u.grid;

  std::vector<double> shells_n;
  for (double N = 1.0;; N *= 2.0) {
    shells_n.push_back(N);
    if (N >= lp_cover_max(g)) break;
  }
  std::vector<double> shells_l;
  for (double L = 1.0;; L *= 2.0) {
    shells_l.push_back(L);
    if (L >= modulation_cover_max(u)) break;
  }

  std::vector<cplx> hat(u.values.size());
  detail::dft3(u.values.data(), hat.data(), u.nt, g.nx, g.ny, -1);

  // acc[n][l] accumulates |P_N Q_L u|^2 without the quadrature measure.
  std::vector<std::vector<double>> acc(
      shells_n.size(), std::vector<double>(shells_l.size(), 0.0));
  const double spacing = tau_spacing(u);
  for (int it = 0; it < u.nt; ++it) {
    const int mt = it < (u.nt + 1) / 2 ? it : it - u.nt;
    const double tau = spacing * mt;
    const std::size_t base = u.slice_offset(it);
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        if (g.is_nyquist(ix, iy)) continue;
        const double a2 = std::norm(hat[base + g.index(ix, iy)]);
        if (a2 == 0.0) continue;
        const double r = std::hypot(g.xi[ix], g.mu[iy]);
        const double d = tau - w_symbol(g.xi[ix], g.mu[iy]);
        for (std::size_t n = 0; n < shells_n.size(); ++n) {
          const double wn = shell_weight(shells_n[n], r);
          if (wn == 0.0) continue;
          for (std::size_t l = 0; l < shells_l.size(); ++l) {
            const double wl = shell_weight(shells_l[l], d);
            if (wl == 0.0) continue;
            acc[n][l] += wn * wn * wl * wl * a2;
          }
        }
      }
    }
  }

  const double measure = g.cell_area() * u.dt();
  double total = 0.0;
  for (std::size_t n = 0; n < shells_n.size(); ++n) {
    for (std::size_t l = 0; l < shells_l.size(); ++l) {
      total += std::pow(shells_n[n], 2.0 * s) * std::pow(shells_l[l], 2.0 * b) *
               acc[n][l] * measure;
    }
  }
  return std::sqrt(total);
}

double edge_mass_fraction(const FieldState& f) {
  const FieldState phys = to_physical(f);
  const auto& g = *phys.grid;
  double total = 0.0;
  double edge = 0.0;
  for (int ix = 0; ix < g.nx; ++ix) {
    const bool out_x = std::fabs(g.x[ix]) > 0.25 * g.Lx;
    for (int iy = 0; iy < g.ny; ++iy) {
      const double m = std::norm(phys.values[g.index(ix, iy)]);
      total += m;
      if (out_x || std::fabs(g.y[iy]) > 0.25 * g.Ly) edge += m;
    }
  }
  return total > 0.0 ? edge / total : 0.0;
}

}  // namespace dysthe
