#include "dysthe/init.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dysthe/io.hpp"
#include "dysthe/norms.hpp"

namespace dysthe {

FieldState build_initial_state(const InitConfig& init, const GridPtr& grid) {
  if (!grid) throw std::invalid_argument("initial data: null grid");
  const auto& g = *grid;

  FieldState f = FieldState::zeros(grid, Rep::physical);
  switch (init.kind) {
    case InitKind::gaussian: {
      if (!(init.sigma_x > 0.0) || (!g.one_dim && !(init.sigma_y > 0.0))) {
        throw std::invalid_argument("initial data: sigma must be positive");
      }
      const double sx2 = 2.0 * init.sigma_x * init.sigma_x;
      const double sy2 = 2.0 * init.sigma_y * init.sigma_y;
      for (int ix = 0; ix < g.nx; ++ix) {
        const double x = g.x[ix];
        for (int iy = 0; iy < g.ny; ++iy) {
          const double y = g.y[iy];
          const double env = std::exp(-x * x / sx2 -
                                      (g.one_dim ? 0.0 : y * y / sy2));
          f.values[g.index(ix, iy)] =
              init.amplitude * env *
              std::polar(1.0, init.carrier_xi * x + init.carrier_mu * y);
        }
      }
      break;
    }
    case InitKind::plane_wave: {
      const double xi0 = init.mode_x * 2.0 * std::numbers::pi / g.Lx;
      const double mu0 =
          g.one_dim ? 0.0 : init.mode_y * 2.0 * std::numbers::pi / g.Ly;
      for (int ix = 0; ix < g.nx; ++ix) {
        for (int iy = 0; iy < g.ny; ++iy) {
          f.values[g.index(ix, iy)] =
              init.amplitude *
              std::polar(1.0, xi0 * g.x[ix] + mu0 * g.y[iy]);
        }
      }
      break;
    }
    case InitKind::file: {
      if (init.path.empty()) {
        throw std::invalid_argument("initial data: file kind needs a path");
      }
      const FieldState loaded = read_snapshot(init.path);
      if (!same_grid(*loaded.grid, g)) {
        throw std::invalid_argument(
            "initial data: snapshot grid does not match the configured grid");
      }
      f = loaded;
      f.grid = grid;
      break;
    }
  }

  if (init.l2_norm > 0.0) {
    const double current = l2_norm(f);
    if (!(current > 0.0)) {
      throw std::invalid_argument(
          "initial data: cannot rescale identically-zero data");
    }
    const double factor = init.l2_norm / current;
    for (cplx& v : f.values) v *= factor;
  }
  return f;
}

}  // namespace dysthe
