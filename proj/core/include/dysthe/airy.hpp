#pragma once

// One-dimensional closed-form propagator: the Airy-type fundamental
// solution of d_t u = i op(alpha xi^3 + beta xi^2) u and the quadrature
// convolution oracle built from it.  The oracle is deliberately independent
// of the spectral machinery so it can arbitrate the solver.

#include "dysthe/field.hpp"

namespace dysthe {

// Fundamental solution of the (alpha, beta) third-order flow,
//   K(x, t) = |3 t alpha|^{-1/3}
//             * exp(i (2 t beta^3 / (27 alpha^2) - beta x / (3 alpha)))
//             * Ai((x - beta^2 t / (3 alpha)) / cbrt(3 t alpha)),
// with cbrt the real signed cube root; exact for the continuum evolution
// uhat(t) = exp(i t (alpha xi^3 + beta xi^2)) uhat(0).  Errors on t = 0 or
// alpha = 0.  At beta = 0, alpha = 1 this is (3t)^{-1/3} Ai(x (3t)^{-1/3}).
cplx airy_fundamental(double x, double t, double alpha, double beta);

// Quadrature oracle: trapezoid convolution of the sampled data with the
// kernel, including an exact transport shift c0 (result evaluated at
// x - c0 t), for the full one-dimensional linear symbol
// alpha xi^3 + beta xi^2 - c0 xi.  O(n^2) sums, O(n) kernel evaluations.
FieldState airy_convolve(const FieldState& u0, double t, double alpha,
                         double beta, double c0);

// One-dimensional finite-depth nonlocal operator: spectral multiplication
// by i coth(h xi) (zero mode set to zero); errors on h <= 0 or 2D input.
FieldState coth_operator_1d(const FieldState& f, double h);

}  // namespace dysthe
