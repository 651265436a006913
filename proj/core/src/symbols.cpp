#include "dysthe/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace dysthe {

double w_symbol(double xi, double mu) { return xi * (xi * xi - 3.0 * mu * mu); }

double omega_symbol(double xi, double mu, double a1, double a2, double a3) {
  return a1 * w_symbol(xi, mu) + a2 * (xi * xi - mu * mu) - a3 * xi;
}

double resonance(double xi1, double mu1, double xi2, double mu2) {
  return 3.0 * xi1 * xi2 * (xi1 + xi2) - 3.0 * xi2 * mu1 * mu1 -
         3.0 * xi1 * mu2 * mu2 - 6.0 * (xi1 + xi2) * mu1 * mu2;
}

void resonance_grad(double xi1, double mu1, double xi2, double mu2,
                    double* dxi, double* dmu) {
  if (dxi == nullptr || dmu == nullptr) {
    throw std::invalid_argument("resonance gradient: null output pointer");
  }
  *dxi = 3.0 * (xi2 * xi2 - mu2 * mu2) - 3.0 * (xi1 * xi1 - mu1 * mu1);
  *dmu = 6.0 * (xi1 * mu1 - xi2 * mu2);
}

double hessian_det_w(double xi, double mu) {
  return -36.0 * (xi * xi + mu * mu);
}

double coth_stable(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("coth: argument must be positive");
  }
  if (x < 1e-2) {
    const double x2 = x * x;
    return 1.0 / x + x / 3.0 - x * x2 / 45.0;
  }
  if (x <= 20.0) {
    return 1.0 + 2.0 / std::expm1(2.0 * x);
  }
  return 1.0 + 2.0 * std::exp(-2.0 * x);
}

std::complex<double> riesz_x_symbol(double xi, double mu) {
  const double r = std::hypot(xi, mu);
  if (r == 0.0) return {0.0, 0.0};
  return {0.0, -xi / r};
}

std::complex<double> finite_depth_symbol(double xi, double mu, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite depth: h must be positive");
  if (xi == 0.0) return {0.0, 0.0};
  const double r = std::hypot(xi, mu);
  return {0.0, (xi / r) * coth_stable(h * r)};
}

std::complex<double> finite_depth_symbol_1d(double xi, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite depth: h must be positive");
  if (xi == 0.0) return {0.0, 0.0};
  const double odd = xi > 0.0 ? 1.0 : -1.0;
  return {0.0, odd * coth_stable(h * std::fabs(xi))};
}

double finite_depth_dx_symbol(double xi, double mu, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite depth: h must be positive");
  if (xi == 0.0) return 0.0;
  const double r = std::hypot(xi, mu);
  return -(xi * xi / r) * coth_stable(h * r);
}

double finite_depth_dx_symbol_1d(double xi, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite depth: h must be positive");
  if (xi == 0.0) return 0.0;
  return -std::fabs(xi) * coth_stable(h * std::fabs(xi));
}

double riesz_dx_symbol(double xi, double mu) {
  const double r = std::hypot(xi, mu);
  if (r == 0.0) return 0.0;
  return -xi * xi / r;
}

KappaCoefficients kappa_coefficients(double kappa) {
  if (!(kappa >= 0.0)) {
    throw std::invalid_argument(
        "kappa coefficients: depth ratio must be nonnegative");
  }
  if (kappa == 0.5) {
    throw std::invalid_argument(
        "kappa coefficients: kappa = 1/2 is the second-harmonic resonance "
        "(coefficients diverge)");
  }
  const double k = kappa;
  const double op = 1.0 + k;        // 1 + kappa
  const double tm = 1.0 - 2.0 * k;  // 1 - 2 kappa
  KappaCoefficients c;
  c.p = (3.0 * k * k + 6.0 * k - 1.0) / (4.0 * op * op);
  c.q = (1.0 + 3.0 * k) / (2.0 * op);
  c.r = -(1.0 - k) * (1.0 + 6.0 * k + k * k) / (8.0 * op * op * op);
  c.s = (3.0 + 2.0 * k + 3.0 * k * k) / (4.0 * op * op);
  c.gamma = (8.0 + k + 2.0 * k * k) / (8.0 * tm * op);
  c.u = (1.0 - k) * (8.0 + k + 2.0 * k * k) / (16.0 * tm * op * op);
  c.v = 3.0 * (4.0 * k * k * k * k + 4.0 * k * k * k - 9.0 * k * k + k - 8.0) /
        (8.0 * op * op * tm * tm);
  c.cg_factor = (1.0 + 3.0 * k) / op;
  return c;
}

}  // namespace dysthe
