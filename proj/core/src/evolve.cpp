#include "dysthe/evolve.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "dysthe/fft.hpp"
#include "dysthe/norms.hpp"
#include "dysthe/spectral.hpp"

namespace dysthe {
namespace {

// Phi-function coefficients are evaluated directly away from the origin and
// by the analytic mean over a circle of radius 2 near it, where the direct
// formulas lose digits to cancellation (the circle keeps every evaluation
// point at modulus > 1).
constexpr int kContourPoints = 32;
constexpr double kContourRadius = 2.0;

template <typename F>
cplx stable_phi(const F& f, cplx z) {
  if (std::abs(z) >= 1.0) return f(z);
  cplx sum(0.0);
  for (int k = 0; k < kContourPoints; ++k) {
    const double theta =
        2.0 * std::numbers::pi * (k + 0.5) / kContourPoints;
    sum += f(z + std::polar(kContourRadius, theta));
  }
  return sum / static_cast<double>(kContourPoints);
}

cplx q_formula(cplx z) { return (std::exp(0.5 * z) - 1.0) / z; }

cplx f1_formula(cplx z) {
  const cplx z2 = z * z;
  return (-4.0 - z + std::exp(z) * (4.0 - 3.0 * z + z2)) / (z2 * z);
}

cplx f2_formula(cplx z) {
  const cplx z2 = z * z;
  return (2.0 + z + std::exp(z) * (-2.0 + z)) / (z2 * z);
}

cplx f3_formula(cplx z) {
  const cplx z2 = z * z;
  return (-4.0 - 3.0 * z - z2 + std::exp(z) * (4.0 - z)) / (z2 * z);
}

void require_matching(const ModelSpec& spec, const FieldState& u,
                      const char* what) {
  if (!spec.grid || !u.grid || !same_grid(*spec.grid, *u.grid)) {
    throw std::invalid_argument(std::string(what) +
                                ": field grid does not match model");
  }
}

}  // namespace

Scheme scheme_from_string(const std::string& name) {
  if (name == "etdrk4") return Scheme::etdrk4;
  if (name == "strang") return Scheme::strang;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected etdrk4 or strang)");
}

std::string scheme_name(Scheme scheme) {
  return scheme == Scheme::etdrk4 ? "etdrk4" : "strang";
}

FieldState linear_propagate(const ModelSpec& spec, const FieldState& u,
                            double t) {
  require_matching(spec, u, "linear propagation");
  const bool was_physical = (u.rep == Rep::physical);
  FieldState hat = to_spectral(u);
  for (std::size_t i = 0; i < hat.values.size(); ++i) {
    hat.values[i] *= std::polar(1.0, spec.omega[i] * t);
  }
  hat.time += t;
  return was_physical ? to_physical(hat) : hat;
}

StepTables make_step_tables(const ModelSpec& spec, Scheme scheme, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step tables: dt must be positive");
  }
  const std::size_t n = spec.omega.size();
  StepTables t;
  t.scheme = scheme;
  t.dt = dt;
  t.E.resize(n);
  t.E2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.E[i] = std::polar(1.0, spec.omega[i] * dt);
    t.E2[i] = std::polar(1.0, 0.5 * spec.omega[i] * dt);
  }
  if (scheme == Scheme::etdrk4) {
    t.Q.resize(n);
    t.f1.resize(n);
    t.f2.resize(n);
    t.f3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx z(0.0, spec.omega[i] * dt);
      t.Q[i] = dt * stable_phi(q_formula, z);
      t.f1[i] = dt * stable_phi(f1_formula, z);
      t.f2[i] = dt * stable_phi(f2_formula, z);
      t.f3[i] = dt * stable_phi(f3_formula, z);
    }
  }
  return t;
}

FieldState step(const ModelSpec& spec, const StepTables& tables,
                const FieldState& u) {
  require_matching(spec, u, "step");
  if (u.rep != Rep::spectral) {
    throw std::invalid_argument("step: state must be in spectral representation");
  }
  if (tables.E2.size() != u.values.size()) {
    throw std::invalid_argument("step: tables were built for a different grid");
  }
  const double dt = tables.dt;
  const std::size_t n = u.values.size();

  if (tables.scheme == Scheme::strang) {
    FieldState v = u;
    for (std::size_t i = 0; i < n; ++i) v.values[i] *= tables.E2[i];
    v.time = u.time + 0.5 * dt;
    const FieldState k1 = nonlinear_rhs(spec, v);
    FieldState mid = v;
    for (std::size_t i = 0; i < n; ++i) mid.values[i] += 0.5 * dt * k1.values[i];
    const FieldState k2 = nonlinear_rhs(spec, mid);
    for (std::size_t i = 0; i < n; ++i) {
      v.values[i] = (v.values[i] + dt * k2.values[i]) * tables.E2[i];
    }
    v.time = u.time + dt;
    return v;
  }

  const FieldState nv = nonlinear_rhs(spec, u);
  FieldState a = u;
  for (std::size_t i = 0; i < n; ++i) {
    a.values[i] = tables.E2[i] * u.values[i] + tables.Q[i] * nv.values[i];
  }
  a.time = u.time + 0.5 * dt;
  const FieldState na = nonlinear_rhs(spec, a);

  FieldState b = u;
  for (std::size_t i = 0; i < n; ++i) {
    b.values[i] = tables.E2[i] * u.values[i] + tables.Q[i] * na.values[i];
  }
  b.time = u.time + 0.5 * dt;
  const FieldState nb = nonlinear_rhs(spec, b);

  FieldState c = u;
  for (std::size_t i = 0; i < n; ++i) {
    c.values[i] = tables.E2[i] * a.values[i] +
                  tables.Q[i] * (2.0 * nb.values[i] - nv.values[i]);
  }
  c.time = u.time + dt;
  const FieldState nc = nonlinear_rhs(spec, c);

  FieldState out = u;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = tables.E[i] * u.values[i] + tables.f1[i] * nv.values[i] +
                    2.0 * tables.f2[i] * (na.values[i] + nb.values[i]) +
                    tables.f3[i] * nc.values[i];
  }
  out.time = u.time + dt;
  return out;
}

FieldState etdrk4_step(const ModelSpec& spec, const FieldState& u, double dt) {
  return step(spec, make_step_tables(spec, Scheme::etdrk4, dt), u);
}

FieldState strang_step(const ModelSpec& spec, const FieldState& u, double dt) {
  return step(spec, make_step_tables(spec, Scheme::strang, dt), u);
}

Trajectory evolve(const ModelSpec& spec, const FieldState& u0,
                  const EvolveOptions& options) {
  if (!(options.dt > 0.0) || !(options.T > 0.0)) {
    throw std::invalid_argument("evolve: dt and T must be positive");
  }
  if (!(options.blowup_linf > 0.0)) {
    throw std::invalid_argument("evolve: blowup threshold must be positive");
  }
  FieldState u = to_spectral(u0);
  const double t0 = u.time;
  const long steps = std::max(1L, std::lround(options.T / options.dt));
  const double dt = options.T / static_cast<double>(steps);
  const StepTables tables = make_step_tables(spec, options.scheme, dt);

  std::set<long> snaps{0L, steps};
  if (!options.snapshot_times.empty()) {
    for (double t : options.snapshot_times) {
      long s = std::lround((t - t0) / dt);
      s = std::min(std::max(s, 0L), steps);
      snaps.insert(s);
    }
  } else if (options.snapshot_every > 0) {
    for (long s = 0; s <= steps; s += options.snapshot_every) snaps.insert(s);
  }
  std::set<long> diags;
  if (options.diag_every > 0) {
    for (long s = 0; s <= steps; s += options.diag_every) diags.insert(s);
    diags.insert(steps);
  }

  Trajectory traj;
  auto record_snapshot = [&traj](const FieldState& f) {
    traj.snapshots.push_back(f);
    traj.snapshot_times.push_back(f.time);
  };
  auto record_diag = [&traj](const FieldState& f) {
    DiagRow row;
    row.t = f.time;
    row.mass = mass(f);
    row.h1 = sobolev_norm(f, 1.0);
    const FieldState phys = to_physical(f);
    row.edge_mass = edge_mass_fraction(phys);
    row.linf = lq_norm(phys, kInfExponent);
    traj.diagnostics.push_back(row);
  };

  record_snapshot(u);
  if (diags.count(0L)) record_diag(u);

  const double inv_sqrt_n =
      1.0 / std::sqrt(static_cast<double>(spec.grid->size()));
  for (long s = 1; s <= steps; ++s) {
    u = step(spec, tables, u);
    u.time = t0 + static_cast<double>(s) * dt;

    // Cheap per-step screen: sum |uhat| / sqrt(n) bounds max |u|.
    double sumabs = 0.0;
    for (const cplx& v : u.values) sumabs += std::abs(v);
    const double bound = sumabs * inv_sqrt_n;
    if (!std::isfinite(bound)) {
      traj.aborted = true;
      traj.reason = "state became non-finite";
      record_diag(u);
      record_snapshot(u);
      break;
    }
    if (bound > options.blowup_linf &&
        lq_norm(u, kInfExponent) > options.blowup_linf) {
      traj.aborted = true;
      traj.reason = "max amplitude exceeded the blowup threshold";
      record_diag(u);
      record_snapshot(u);
      break;
    }
    if (diags.count(s)) record_diag(u);
    if (snaps.count(s)) record_snapshot(u);
  }
  return traj;
}

SpaceTimeField free_spacetime(const ModelSpec& spec, const FieldState& u0,
                              double t0, double window, int nt) {
  require_matching(spec, u0, "free space-time sampling");
  const FieldState hat = to_spectral(u0);
  SpaceTimeField out = SpaceTimeField::zeros(spec.grid, nt, t0, window);
  const auto& g = *spec.grid;
  std::vector<cplx> slice(hat.values.size());
  for (int it = 0; it < nt; ++it) {
    const double shift = out.time_of(it) - hat.time;
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        // (-1)^{ix+iy} realigns the raw DFT origin with the physical
        // samples starting at -L/2, matching spectral_transform.
        const double sign = ((ix + iy) % 2 == 0) ? 1.0 : -1.0;
        const std::size_t i = g.index(ix, iy);
        slice[i] = sign * hat.values[i] * std::polar(1.0, spec.omega[i] * shift);
      }
    }
    detail::dft2(slice.data(), out.values.data() + out.slice_offset(it), g.nx,
                 g.ny, +1);
  }
  return out;
}

}  // namespace dysthe
