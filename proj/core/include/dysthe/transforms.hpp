#pragma once

// Exact symmetry transforms: the change of variables that normalizes a
// general cubic dispersion to w(xi, mu) = xi^3 - 3 xi mu^2, the scaling
// map, and the space-time reversal involution.

#include <array>

#include "dysthe/field.hpp"

namespace dysthe {

// Shift/phase data of the normalizing change of variables.  For dispersion
//   omega = a1 (xi^3 - 3 xi mu^2) + a2 (xi^2 - mu^2) - a3 xi,  a1 != 0,
//     a1cov = a2^2/(3 a1^2) + a3/a1
//     a2cov = a2/(3 a1)
//     a3cov = a2 a3/(3 a1^2) + (2/27) a2^3/a1^3,
// and if v solves the (a1, a2, a3) equation then
//   u(t, x, y) = exp(i a2cov (x + a1cov t)) exp(-i a3cov t)
//                v(t/a1, x + a1cov t, y)
// solves the normalized equation (with remapped nonlinear coefficients).
struct CovCoefficients {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

CovCoefficients cov_coefficients(double alpha1, double alpha2, double alpha3);

// Build the normalized-side state u at time alpha1 * v.time from the
// general-dispersion state v.  The carrier mode a2cov must lie on the
// x-frequency lattice of the grid (tolerance 1e-9), otherwise the
// modulated field would not be periodic on the box.
FieldState apply_cov(const FieldState& v, const std::array<double, 3>& alpha);

// Inverse map: normalized-side state u at time t -> general-dispersion
// state at time t / alpha1.
FieldState apply_cov_inverse(const FieldState& u, const std::array<double, 3>& alpha);

// Nonlinear-coefficient remap induced by the change of variables:
//   (c1, c2, c3, c4) -> (1/a1) (c1 - i a2cov c2 + i a2cov c3, c2, c3, c4).
// The 1/a1 factor comes from the time dilation; a2cov = alpha2/(3 alpha1).
std::array<cplx, 4> remap_nonlinear_coeffs(const std::array<cplx, 4>& c,
                                           double a2cov, double alpha1 = 1.0);

// Scaling map u -> lambda * u(lambda x, lambda y): exact on samples (values
// scaled by lambda, box lengths divided by lambda, same point count); the
// L^2 norm is invariant in two dimensions.
FieldState scale_field(const FieldState& f, double lambda);

// Space reversal composed with conjugation, the spatial part of the
// involution u(t, x, y) -> conj(u(-t, -x, -y)).
FieldState space_reversal_conj(const FieldState& f);

// Coefficient map induced by the involution: c -> (-conj c1, conj c2,
// conj c3, -conj c4); every mass-conserving member is a fixed point.
std::array<cplx, 4> time_reversal_coeffs(const std::array<cplx, 4>& c);

// True when a is an integer multiple of 2 pi / L within tol.
bool on_frequency_lattice(double a, double L, double tol = 1e-9);

}  // namespace dysthe
