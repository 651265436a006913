#pragma once

// Empirical space-time estimate harness: measured constants of the
// dispersive-smoothing inequalities for the normalized free evolution, and
// the scattering pullback diagnostic.
//
// All ratios sample the free flow on nt uniform slices over the symmetric
// window [-T, T] and use the cell/uniform quadrature of the norm module.
// Only boundedness/stability of the measured constants is meaningful; the
// routines return raw numbers and leave thresholds to the callers.

#include <cstdint>
#include <vector>

#include "dysthe/evolve.hpp"

namespace dysthe {

// || D^{1/4} S(t) phi ||_{L^4_{x,y,t}} / ||phi||_{L^2} with D^{1/4} the
// multiplier |(xi, mu)|^{1/4}; errors on zero data.
double strichartz_ratio(const ModelSpec& spec, const FieldState& phi,
                        double t_window, int nt);

// || P_N S(t) phi ||_{L^4_{x,y,t}} * N^{1/4} / || P_N phi ||_{L^2} for a
// dyadic band N >= 2; errors when the band carries no mass.
double l4_band_ratio(const ModelSpec& spec, const FieldState& phi, double band,
                     double t_window, int nt);

// Bilinear interaction constant
//   || (P_{N1} S phi1) (P_{N2} S phi2) ||_{L^2_{x,y,t}} * N1 / sqrt(N2)
//     / (|| P_{N1} phi1 || * || P_{N2} phi2 ||),
// requiring dyadic N1 >= 4 N2 and nonempty shells.
double bilinear_ratio(const ModelSpec& spec, const FieldState& phi1, double n1,
                      const FieldState& phi2, double n2, double t_window, int nt);

// One Monte-Carlo draw for the bilinear harness: a localized wave packet
// with carrier on the dyadic shell |k| = band, random center, width jitter,
// and phase; the companion profile for the low shell extends across the box
// transverse to the carrier so every high-frequency packet sweep crosses it.
FieldState bilinear_packet(const GridPtr& grid, double band, std::uint64_t seed,
                           std::uint64_t draw);
FieldState bilinear_strip(const GridPtr& grid, double band, std::uint64_t seed,
                          std::uint64_t draw);

// Output-shell statistics of one bilinear draw, binned by how the product
// frequency N3 compares with the input shells (reported, never asserted).
struct BilinearCaseBins {
  double high = 0.0;  // share of product mass with N3 >= N1/2
  double mid = 0.0;   // share with N2 < N3 < N1/2
  double low = 0.0;   // share with N3 <= N2
};

BilinearCaseBins bilinear_case_bins(const ModelSpec& spec, const FieldState& phi1,
                                    double n1, const FieldState& phi2, double n2,
                                    double t_window, int nt);

// Scattering diagnostic: pull back each strictly-positive-time snapshot by
// the free group and record successive L^2 differences
//   d_k = || S(-t_k) u(t_k) - S(-t_{k-1}) u(t_{k-1}) ||_{L^2}.
// The t = 0 initial state is not part of the dyadic family and is ignored.
// Needs at least three positive-time snapshots; the final pullback is the
// candidate scattering datum.
struct ScatteringProfile {
  std::vector<double> times;  // t_k for each difference
  std::vector<double> diffs;  // d_k
  FieldState final_pullback;  // S(-t_last) u(t_last)
};

ScatteringProfile scattering_profile(const ModelSpec& spec, const Trajectory& traj);

// Least-squares slope of log(y) against log(x) (estimate trend fitting).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dysthe
