#pragma once

// Fourier multipliers and dispersion relations used by the model family.
//
// Sign convention: the stored dispersion omega(xi, mu) is real and each
// linear mode evolves by  uhat(t) = exp(+i t omega) uhat(0)  (fixed by the
// plane-wave arbiter in the integrator tests).  All nonlocal operators are
// given by their symbol m(xi, mu) acting as (op f)^ = m fhat.

#include <complex>

namespace dysthe {

// Normalized third-order dispersion w(xi, mu) = xi^3 - 3 xi mu^2.
double w_symbol(double xi, double mu);

// General three-parameter dispersion
//   omega(xi, mu) = a1 (xi^3 - 3 xi mu^2) + a2 (xi^2 - mu^2) - a3 xi.
double omega_symbol(double xi, double mu, double a1, double a2, double a3);

// Resonance functional
//   R = w(xi1 + xi2, mu1 + mu2) - w(xi1, mu1) - w(xi2, mu2)
//     = 3 xi1 xi2 (xi1 + xi2) - 3 xi2 mu1^2 - 3 xi1 mu2^2
//       - 6 (xi1 + xi2) mu1 mu2.
double resonance(double xi1, double mu1, double xi2, double mu2);

// Gradient of R along the interaction constraint (the sum frequency held
// fixed, d/dk1 with k2 = k - k1):
//   dR/dxi1 = 3 (xi2^2 - mu2^2) - 3 (xi1^2 - mu1^2)
//   dR/dmu1 = 6 xi1 mu1 - 6 xi2 mu2.
// Its magnitude is 3 |z1 - z2| |z1 + z2| for z = xi + i mu, which is the
// quantity bounded below by the high shell squared in the bilinear theory;
// the unconstrained slot partials can vanish at admissible configurations.
void resonance_grad(double xi1, double mu1, double xi2, double mu2,
                    double* dxi, double* dmu);

// Determinant of the Hessian of w: -36 (xi^2 + mu^2).
double hessian_det_w(double xi, double mu);

// Numerically stable coth(x) for x > 0 (Laurent series for small x, an
// expm1 identity in the midrange, saturation for large x).
double coth_stable(double x);

// Riesz-type transform in x: symbol -i xi / |(xi, mu)|, zero at the origin.
std::complex<double> riesz_x_symbol(double xi, double mu);

// Finite-depth nonlocal operator: symbol i (xi/r) coth(h r) with
// r = |(xi, mu)|, zero whenever xi = 0 (including the origin).
std::complex<double> finite_depth_symbol(double xi, double mu, double h);
// One-dimensional variant i coth(h xi), odd in xi, zero at xi = 0.
std::complex<double> finite_depth_symbol_1d(double xi, double h);

// Composed operator d_x o (nonlocal operator), the real symbols actually
// used by the N4 nonlinearity: -(xi^2/r) coth(h r) in 2D, -xi coth(h xi)
// in 1D (removable limit -1/h at xi -> 0; the exact lattice zero mode is
// set to 0 on the periodic box), and -xi^2/r for the Riesz case.
double finite_depth_dx_symbol(double xi, double mu, double h);
double finite_depth_dx_symbol_1d(double xi, double h);
double riesz_dx_symbol(double xi, double mu);

// Depth-ratio coefficients of the gravity-capillary family, kappa >= 0,
// kappa != 1/2 (gamma, u, v carry 1 - 2 kappa denominators).
struct KappaCoefficients {
  double p;          // xi^2 dispersion weight
  double q;          // mu^2 dispersion weight
  double r;          // xi^3 dispersion weight
  double s;          // xi mu^2 dispersion weight
  double gamma;      // |u|^2 u coefficient scale
  double u;          // u^2 d_x conj(u) coefficient scale
  double v;          // |u|^2 d_x u coefficient scale
  double cg_factor;  // group-velocity factor (1 + 3 kappa)/(1 + kappa)
};

KappaCoefficients kappa_coefficients(double kappa);

}  // namespace dysthe
