#pragma once

// Time integration of the assembled models.
//
// Two schemes act on spectral-space states:
//   - etdrk4: fourth-order exponential time differencing (exact linear part,
//     contour-averaged phi-coefficients near the origin);
//   - strang: exact linear half-steps around an explicit midpoint step on
//     the nonlinear-only flow (second order).
// Both reduce to the exact linear propagator when all c_j vanish.

#include <functional>
#include <string>
#include <vector>

#include "dysthe/models.hpp"

namespace dysthe {

enum class Scheme { etdrk4, strang };

Scheme scheme_from_string(const std::string& name);
std::string scheme_name(Scheme scheme);

// Exact free evolution by time t: uhat -> exp(i omega t) uhat.
FieldState linear_propagate(const ModelSpec& spec, const FieldState& u, double t);

// Precomputed per-mode stepping tables for a fixed dt.
struct StepTables {
  Scheme scheme = Scheme::etdrk4;
  double dt = 0.0;
  std::vector<cplx> E;   // exp(z),    z = i omega dt
  std::vector<cplx> E2;  // exp(z/2)
  std::vector<cplx> Q;   // dt (e^{z/2} - 1)/z
  std::vector<cplx> f1;  // dt (-4 - z + e^z (4 - 3z + z^2)) / z^3
  std::vector<cplx> f2;  // dt (2 + z + e^z (-2 + z)) / z^3
  std::vector<cplx> f3;  // dt (-4 - 3z - z^2 + e^z (4 - z)) / z^3
};

StepTables make_step_tables(const ModelSpec& spec, Scheme scheme, double dt);

// One step of the selected scheme (u must be spectral; returns spectral).
FieldState step(const ModelSpec& spec, const StepTables& tables, const FieldState& u);

// Single-step conveniences (build throwaway tables; u must be spectral).
FieldState etdrk4_step(const ModelSpec& spec, const FieldState& u, double dt);
FieldState strang_step(const ModelSpec& spec, const FieldState& u, double dt);

struct EvolveOptions {
  Scheme scheme = Scheme::etdrk4;
  double dt = 1e-3;
  double T = 1.0;            // final time (dt is nudged to divide T exactly)
  int snapshot_every = 0;    // keep every k-th state (0 = endpoints only)
  int diag_every = 0;        // record diagnostics every k steps (0 = off)
  double blowup_linf = 1e6;  // abort threshold on max |u|
  // Explicit snapshot times (overrides snapshot_every when non-empty; each
  // entry is rounded to the nearest step, t=0 and t=T are always kept).
  std::vector<double> snapshot_times;
};

struct DiagRow {
  double t = 0.0;
  double mass = 0.0;
  double h1 = 0.0;
  double edge_mass = 0.0;
  double linf = 0.0;
};

struct Trajectory {
  std::vector<FieldState> snapshots;  // spectral states, includes t=0 and t=T
  std::vector<double> snapshot_times;
  std::vector<DiagRow> diagnostics;
  bool aborted = false;
  std::string reason;
};

// Integrate from u0 (either representation) to time T.
Trajectory evolve(const ModelSpec& spec, const FieldState& u0, const EvolveOptions& options);

// Sample the free (linear-only) flow on nt uniform times over [t0, t0 + window).
SpaceTimeField free_spacetime(const ModelSpec& spec, const FieldState& u0,
                              double t0, double window, int nt);

}  // namespace dysthe
