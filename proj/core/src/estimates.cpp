#include "dysthe/estimates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dysthe/fft.hpp"
#include "dysthe/norms.hpp"
#include "dysthe/rng.hpp"
#include "dysthe/spectral.hpp"

namespace dysthe {
namespace {

void require_window(double t_window, int nt) {
  if (!(t_window > 0.0)) {
    throw std::invalid_argument("estimate: time window must be positive");
  }
  if (nt < 4) {
    throw std::invalid_argument("estimate: need at least four time slices");
  }
}

// Physical-space free-flow sample at absolute time t from spectral data.
FieldState flow_at(const ModelSpec& spec, const FieldState& hat, double t) {
  return to_physical(linear_propagate(spec, hat, t - hat.time));
}

// Rejects shells that carry no mass beyond transform roundoff.  The cutoff
// is relative to the norm of the unprojected input: physically sampled data
// leaves ~1e-16 of spectral dust in every shell, so an absolute zero test
// would never fire.
double require_shell_mass(const FieldState& projected, double reference,
                          const char* what) {
  const double norm = l2_norm(projected);
  if (!(norm > 1e-12 * reference)) {
    throw std::invalid_argument(std::string(what) +
                                ": the projected shell carries no mass");
  }
  return norm;
}

}  // namespace

double strichartz_ratio(const ModelSpec& spec, const FieldState& phi,
                        double t_window, int nt) {
  require_window(t_window, nt);
  const double denom = l2_norm(phi);
  if (!(denom > 0.0)) {
    throw std::invalid_argument("strichartz ratio: zero data");
  }
  FieldState hat = apply_multiplier(
      to_spectral(phi), [](double xi, double mu) -> cplx {
        return {std::pow(xi * xi + mu * mu, 0.125), 0.0};
      });
  const double dt = 2.0 * t_window / nt;
  const double cell = spec.grid->cell_area();
  double fourth = 0.0;
  for (int it = 0; it < nt; ++it) {
    const FieldState u = flow_at(spec, hat, -t_window + it * dt);
    double slice = 0.0;
    for (const cplx& v : u.values) {
      const double m2 = std::norm(v);
      slice += m2 * m2;
    }
    fourth += slice * cell * dt;
  }
  return std::pow(fourth, 0.25) / denom;
}

double l4_band_ratio(const ModelSpec& spec, const FieldState& phi, double band,
                     double t_window, int nt) {
  require_window(t_window, nt);
  if (!(band >= 2.0)) {
    throw std::invalid_argument("band ratio: the band must be a dyadic N >= 2");
  }
  const FieldState hat = to_spectral(lp_project(phi, band));
  const double denom = require_shell_mass(hat, l2_norm(phi), "band ratio");
  const double dt = 2.0 * t_window / nt;
  const double cell = spec.grid->cell_area();
  double fourth = 0.0;
  for (int it = 0; it < nt; ++it) {
    const FieldState u = flow_at(spec, hat, -t_window + it * dt);
    double slice = 0.0;
    for (const cplx& v : u.values) {
      const double m2 = std::norm(v);
      slice += m2 * m2;
    }
    fourth += slice * cell * dt;
  }
  return std::pow(fourth, 0.25) * std::pow(band, 0.25) / denom;
}

double bilinear_ratio(const ModelSpec& spec, const FieldState& phi1, double n1,
                      const FieldState& phi2, double n2, double t_window,
                      int nt) {
  require_window(t_window, nt);
  if (!(n1 >= 4.0 * n2)) {
    throw std::invalid_argument("bilinear ratio: need N1 >= 4 N2");
  }
  const FieldState hat1 = to_spectral(lp_project(phi1, n1));
  const FieldState hat2 = to_spectral(lp_project(phi2, n2));
  const double d1 = require_shell_mass(hat1, l2_norm(phi1), "bilinear ratio");
  const double d2 = require_shell_mass(hat2, l2_norm(phi2), "bilinear ratio");
  const double dt = 2.0 * t_window / nt;
  const double cell = spec.grid->cell_area();
  double sum = 0.0;
  for (int it = 0; it < nt; ++it) {
    const double t = -t_window + it * dt;
    const FieldState u1 = flow_at(spec, hat1, t);
    const FieldState u2 = flow_at(spec, hat2, t);
    double slice = 0.0;
    for (std::size_t i = 0; i < u1.values.size(); ++i) {
      slice += std::norm(u1.values[i] * u2.values[i]);
    }
    sum += slice * cell * dt;
  }
  return std::sqrt(sum) * n1 / std::sqrt(n2) / (d1 * d2);
}

FieldState bilinear_packet(const GridPtr& grid, double band, std::uint64_t seed,
                           std::uint64_t draw) {
  if (!grid || grid->one_dim) {
    throw std::invalid_argument("bilinear packet: needs a 2D grid");
  }
  if (!(band >= 1.0)) {
    throw std::invalid_argument("bilinear packet: band must be >= 1");
  }
  const auto& g = *grid;
  const double step = 2.0 * std::numbers::pi / g.Lx;
  // Carrier snapped to the x-frequency lattice so the phase is periodic.
  const double kc = step * std::round(band / step);
  const double sigma =
      (5.0 / band) * (0.85 + 0.3 * hash_uniform(seed, draw, 0));
  const double cx = (hash_uniform(seed, draw, 1) - 0.5) * g.Lx;
  const double cy = (hash_uniform(seed, draw, 2) - 0.5) * g.Ly;
  const double theta = 2.0 * std::numbers::pi * hash_uniform(seed, draw, 3);

  FieldState f = FieldState::zeros(grid, Rep::physical);
  for (int ix = 0; ix < g.nx; ++ix) {
    const double dx = std::remainder(g.x[ix] - cx, g.Lx);
    for (int iy = 0; iy < g.ny; ++iy) {
      const double dy = std::remainder(g.y[iy] - cy, g.Ly);
      const double env =
          std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
      f.values[g.index(ix, iy)] = env * std::polar(1.0, kc * dx + theta);
    }
  }
  return f;
}

FieldState bilinear_strip(const GridPtr& grid, double band, std::uint64_t seed,
                          std::uint64_t draw) {
  if (!grid || grid->one_dim) {
    throw std::invalid_argument("bilinear strip: needs a 2D grid");
  }
  if (!(band >= 1.0)) {
    throw std::invalid_argument("bilinear strip: band must be >= 1");
  }
  const auto& g = *grid;
  const double step = 2.0 * std::numbers::pi / g.Lx;
  const double kc = step * std::round(band / step);
  const double sigma =
      (5.0 / band) * (0.85 + 0.3 * hash_uniform(seed, draw, 0));
  const double cx = (hash_uniform(seed, draw, 1) - 0.5) * g.Lx;
  const double theta = 2.0 * std::numbers::pi * hash_uniform(seed, draw, 2);

  FieldState f = FieldState::zeros(grid, Rep::physical);
  for (int ix = 0; ix < g.nx; ++ix) {
    const double dx = std::remainder(g.x[ix] - cx, g.Lx);
    const cplx value = std::exp(-dx * dx / (2.0 * sigma * sigma)) *
                       std::polar(1.0, kc * dx + theta);
    for (int iy = 0; iy < g.ny; ++iy) f.values[g.index(ix, iy)] = value;
  }
  return f;
}

BilinearCaseBins bilinear_case_bins(const ModelSpec& spec,
                                    const FieldState& phi1, double n1,
                                    const FieldState& phi2, double n2,
                                    double t_window, int nt) {
  require_window(t_window, nt);
  if (!(n1 >= 4.0 * n2)) {
    throw std::invalid_argument("bilinear cases: need N1 >= 4 N2");
  }
  const FieldState hat1 = to_spectral(lp_project(phi1, n1));
  const FieldState hat2 = to_spectral(lp_project(phi2, n2));
  require_shell_mass(hat1, l2_norm(phi1), "bilinear cases");
  require_shell_mass(hat2, l2_norm(phi2), "bilinear cases");
  const auto& g = *spec.grid;
  const double dt = 2.0 * t_window / nt;
  std::vector<cplx> product(g.size()), phat(g.size());
  BilinearCaseBins bins;
  double total = 0.0;
  for (int it = 0; it < nt; ++it) {
    const double t = -t_window + it * dt;
    const FieldState u1 = flow_at(spec, hat1, t);
    const FieldState u2 = flow_at(spec, hat2, t);
    for (std::size_t i = 0; i < product.size(); ++i) {
      product[i] = u1.values[i] * u2.values[i];
    }
    detail::dft2(product.data(), phat.data(), g.nx, g.ny, -1);
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        if (g.is_nyquist(ix, iy)) continue;
        const double m2 = std::norm(phat[g.index(ix, iy)]);
        if (m2 == 0.0) continue;
        const double r = std::hypot(g.xi[ix], g.mu[iy]);
        total += m2;
        if (r >= 0.5 * n1) {
          bins.high += m2;
        } else if (r <= n2) {
          bins.low += m2;
        } else {
          bins.mid += m2;
        }
      }
    }
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("bilinear cases: the product carries no mass");
  }
  bins.high /= total;
  bins.mid /= total;
  bins.low /= total;
  return bins;
}

ScatteringProfile scattering_profile(const ModelSpec& spec,
                                     const Trajectory& traj) {
  std::vector<FieldState> pullbacks;
  std::vector<double> times;
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    const double t = traj.snapshot_times[i];
    if (!(t > 0.0)) continue;
    FieldState hat = to_spectral(traj.snapshots[i]);
    pullbacks.push_back(linear_propagate(spec, hat, -t));
    times.push_back(t);
  }
  if (pullbacks.size() < 3) {
    throw std::invalid_argument(
        "scattering profile: need at least three positive-time snapshots");
  }
  ScatteringProfile profile;
  for (std::size_t k = 1; k < pullbacks.size(); ++k) {
    FieldState diff = pullbacks[k];
    for (std::size_t i = 0; i < diff.values.size(); ++i) {
      diff.values[i] -= pullbacks[k - 1].values[i];
    }
    profile.times.push_back(times[k]);
    profile.diffs.push_back(l2_norm(diff));
  }
  profile.final_pullback = pullbacks.back();
  return profile;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("log-log slope: need matching samples (>= 2)");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("log-log slope: samples must be positive");
    }
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (!(sxx > 0.0)) {
    throw std::invalid_argument("log-log slope: abscissae must be distinct");
  }
  return sxy / sxx;
}

}  // namespace dysthe
