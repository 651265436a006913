#include "dysthe/grid.hpp"

#include <cmath>
#include <numbers>

namespace dysthe {

namespace {

std::vector<double> frequency_lattice(int n, double L) {
  std::vector<double> out(n);
  const double step = 2.0 * std::numbers::pi / L;
  for (int i = 0; i < n; ++i) {
    const int m = i < n / 2 ? i : i - n;
    out[i] = step * m;
  }
  return out;
}

std::vector<double> sample_lattice(int n, double L) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = -0.5 * L + i * L / n;
  }
  return out;
}

void require_axis(int n, double L, const char* axis) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument(std::string("grid: n") + axis +
                                " must be even and >= 8");
  }
  if (!(L > 0.0)) {
    throw std::invalid_argument(std::string("grid: L") + axis +
                                " must be positive");
  }
}

}  // namespace

double SpectralGrid::max_radius() const {
  // Largest surviving |(xi, mu)|: the corner just below Nyquist.
  const double xi_max = 2.0 * std::numbers::pi * (nx / 2 - 1) / Lx;
  if (one_dim) {
    return xi_max;
  }
  const double mu_max = 2.0 * std::numbers::pi * (ny / 2 - 1) / Ly;
  return std::hypot(xi_max, mu_max);
}

GridPtr make_grid(int nx, int ny, double Lx, double Ly) {
  require_axis(nx, Lx, "x");
  require_axis(ny, Ly, "y");
  auto g = std::make_shared<SpectralGrid>();
  g->nx = nx;
  g->ny = ny;
  g->Lx = Lx;
  g->Ly = Ly;
  g->one_dim = false;
  g->xi = frequency_lattice(nx, Lx);
  g->mu = frequency_lattice(ny, Ly);
  g->x = sample_lattice(nx, Lx);
  g->y = sample_lattice(ny, Ly);
  return g;
}

GridPtr make_grid_1d(int nx, double Lx) {
  require_axis(nx, Lx, "x");
  auto g = std::make_shared<SpectralGrid>();
  g->nx = nx;
  g->ny = 1;
  g->Lx = Lx;
  g->Ly = 1.0;
  g->one_dim = true;
  g->xi = frequency_lattice(nx, Lx);
  g->mu = {0.0};
  g->x = sample_lattice(nx, Lx);
  g->y = {0.0};
  return g;
}

bool same_grid(const SpectralGrid& a, const SpectralGrid& b) {
  return a.nx == b.nx && a.ny == b.ny && a.Lx == b.Lx && a.Ly == b.Ly &&
         a.one_dim == b.one_dim;
}

}  // namespace dysthe
