#include "dysthe/airy.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dysthe/spectral.hpp"
#include "dysthe/symbols.hpp"

namespace dysthe {

cplx airy_fundamental(double x, double t, double alpha, double beta) {
  if (t == 0.0 || alpha == 0.0) {
    throw std::invalid_argument(
        "airy kernel: defined only for t != 0 and alpha != 0");
  }
  const double cube = 3.0 * t * alpha;
  // The stationary-phase substitution flips orientation when cube < 0, so
  // the prefactor is |cube|^{-1/3} while the argument keeps the signed root.
  const double scale = std::pow(std::fabs(cube), -1.0 / 3.0);
  const double arg = (x - beta * beta * t / (3.0 * alpha)) / std::cbrt(cube);
  const double phase = 2.0 * t * beta * beta * beta / (27.0 * alpha * alpha) -
                       beta * x / (3.0 * alpha);
  return scale * boost::math::airy_ai(arg) * std::polar(1.0, phase);
}

FieldState airy_convolve(const FieldState& u0, double t, double alpha,
                         double beta, double c0) {
  check_field(u0);
  if (!u0.grid->one_dim) {
    throw std::invalid_argument("airy oracle: needs a 1D grid");
  }
  if (t == 0.0 || alpha == 0.0) {
    throw std::invalid_argument(
        "airy oracle: defined only for t != 0 and alpha != 0");
  }
  const FieldState phys = to_physical(u0);
  const auto& g = *u0.grid;
  const int n = g.nx;
  const double dx = g.Lx / n;

  std::vector<cplx> kernel(static_cast<std::size_t>(2 * n - 1));
  for (int d = -(n - 1); d <= n - 1; ++d) {
    kernel[static_cast<std::size_t>(d + n - 1)] =
        airy_fundamental(d * dx - c0 * t, t, alpha, beta);
  }

  FieldState out = phys;
  out.time = u0.time + t;
  for (int i = 0; i < n; ++i) {
    cplx sum(0.0);
    for (int j = 0; j < n; ++j) {
      sum += kernel[static_cast<std::size_t>(i - j + n - 1)] * phys.values[j];
    }
    out.values[static_cast<std::size_t>(i)] = sum * dx;
  }
  return out;
}

FieldState coth_operator_1d(const FieldState& f, double h) {
  check_field(f);
  if (!f.grid->one_dim) {
    throw std::invalid_argument("coth operator: needs a 1D grid");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("coth operator: depth must be positive");
  }
  return apply_multiplier(f, [h](double xi, double) {
    return finite_depth_symbol_1d(xi, h);
  });
}

}  // namespace dysthe
