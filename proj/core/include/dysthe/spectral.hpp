#pragma once

// Representation changes, Fourier multipliers, dealiasing, and the
// Littlewood-Paley / modulation projections used by the estimate harness.
//
// Bump conventions: eta is even, smooth, identically 1 on [-5/4, 5/4] and
// supported in [-8/5, 8/5], glued with the standard exp(-1/x) mollifier;
// phi(r) = eta(r) - eta(2r).  Dyadic spatial weights:
//   phi_N(k) = phi(|k| / N) for N = 2, 4, 8, ...,   phi_1(k) = eta(|k|),
// which telescope to a partition of unity.  Modulation weights use the
// distance tau - w(xi, mu) to the cubic characteristic surface.

#include <functional>

#include "dysthe/field.hpp"

namespace dysthe {

// --- bump functions ---------------------------------------------------------
double eta_bump(double r);   // even cutoff: 1 on |r|<=5/4, 0 on |r|>=8/5
double phi_bump(double r);   // eta(r) - eta(2r)
// Dyadic shell weight at radius r for shell index N (N = 1 or a power of 2).
double shell_weight(double N, double r);

// --- representation and multipliers -----------------------------------------
// Convert to the requested representation; rejects input already in the
// target representation so accidental double transforms surface as errors.
// The forward transform zeroes Nyquist rows/columns, so spectral data is
// always Nyquist-free by construction.
FieldState spectral_transform(const FieldState& f, Rep target);
// Lenient helpers: return the argument unchanged when already converted.
FieldState to_spectral(const FieldState& f);
FieldState to_physical(const FieldState& f);

// Apply a diagonal Fourier multiplier m(xi, mu); representation preserved.
FieldState apply_multiplier(const FieldState& f,
                            const std::function<cplx(double, double)>& m);

// Zero all modes with integer index |jx| > nx/3 or |jy| > ny/3 (2/3 rule);
// representation preserved.
FieldState dealias(const FieldState& f);

// --- Littlewood-Paley projections -------------------------------------------
// P_N: multiply the spectrum by phi_N(|k|).  N must be 1 or a power of two.
FieldState lp_project(const FieldState& f, double N);

// Smallest dyadic N such that sum_{M <= N} phi_M == 1 on the whole lattice.
double lp_cover_max(const SpectralGrid& grid);

// --- modulation projections and space-time transforms ------------------------
// Q_L: weight the space-time spectrum by phi(2^{-l}(tau - w(xi, mu))), with
// the L = 1 weight eta(tau - w).  Input/output in physical representation.
SpaceTimeField modulation_project(const SpaceTimeField& u, double L);

// Smallest dyadic L covering max |tau - w| over the discrete lattice.
double modulation_cover_max(const SpaceTimeField& u);

// Width (2*pi/window) of the discrete tau lattice; a window too short to
// resolve the L = 1 band (spacing > 1) is flagged by this helper.
double tau_spacing(const SpaceTimeField& u);

}  // namespace dysthe
