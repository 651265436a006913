#pragma once

// Quadrature norms and conserved quantities.
//
// Spatial integrals use the uniform cell weight Lx*Ly/(nx*ny) (exact for
// band-limited trigonometric data); time integrals over the periodized
// window use the uniform weight window/nt.  p = inf is accepted and means
// the max over samples.

#include "dysthe/field.hpp"

namespace dysthe {

inline constexpr double kInfExponent = -1.0;  // sentinel for p = infinity

// L^q norm over the box of a spatial field (physical or spectral input).
double lq_norm(const FieldState& f, double q);
double l2_norm(const FieldState& f);

// Mass integral int |u|^2 dx dy.
double mass(const FieldState& f);

// Sobolev norm: (sum (1 + |k|^2)^s |fhat|^2 * cell)^{1/2}.
double sobolev_norm(const FieldState& f, double s);

// Mixed norm L^p_t L^q_{xy} of a sampled trajectory; pass kInfExponent for
// either exponent to take a max instead of an integral.
double mixed_norm(const SpaceTimeField& u, double p, double q);
// FieldState overload: a single time sample, so only the spatial L^q acts.
double mixed_norm(const FieldState& u, double p, double q);

// Dyadically weighted space-time norm
//   ( sum_{N,L} N^{2s} L^{2b} |P_N Q_L u|_{L^2}^2 )^{1/2}
// with the projections of spectral.hpp.  The smooth weights enter squared,
// so at s = b = 0 this equals L^2_{txy} exactly only for data supported on
// the weight plateaus (general data sees the overlap regions twice).
double xsb_norm(const SpaceTimeField& u, double s, double b);

// Fraction of mass outside the centered half-box window
// (|x| > Lx/4 or |y| > Ly/4); 0 for a zero field.
double edge_mass_fraction(const FieldState& f);

}  // namespace dysthe
