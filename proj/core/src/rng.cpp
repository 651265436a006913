#include "dysthe/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dysthe {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t site_key(std::uint64_t seed, std::uint64_t draw,
                       std::uint64_t index) {
  return mix64(mix64(mix64(seed) ^ draw) ^ index);
}

double to_unit(std::uint64_t bits) {
  // Top 53 bits -> [0, 1) with full double resolution.
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

double hash_uniform(std::uint64_t seed, std::uint64_t draw,
                    std::uint64_t index) {
  return to_unit(site_key(seed, draw, index));
}

cplx hash_gaussian(std::uint64_t seed, std::uint64_t draw,
                   std::uint64_t index) {
  const std::uint64_t key = site_key(seed, draw, index);
  const double u1 = to_unit(key);
  const double u2 = to_unit(mix64(key));
  // Box-Muller; guard the log against u1 == 0.
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return cplx(radius * std::cos(angle), radius * std::sin(angle));
}

FieldState random_field(const GridPtr& grid, std::uint64_t seed,
                        std::uint64_t draw) {
  FieldState f = FieldState::zeros(grid, Rep::physical);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    f.values[i] = hash_gaussian(seed, draw, static_cast<std::uint64_t>(i));
  }
  return f;
}

FieldState random_annulus_field(const GridPtr& grid, std::uint64_t seed,
                                std::uint64_t draw, double lo, double hi) {
  if (!(0.0 <= lo && lo <= hi)) {
    throw std::invalid_argument("random annulus: need 0 <= lo <= hi");
  }
  FieldState f = FieldState::zeros(grid, Rep::spectral);
  const auto& g = *grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      if (g.is_nyquist(ix, iy)) continue;
      const double r = std::hypot(g.xi[ix], g.mu[iy]);
      if (r < lo || r > hi) continue;
      const std::size_t i = g.index(ix, iy);
      f.values[i] = hash_gaussian(seed, draw, static_cast<std::uint64_t>(i));
    }
  }
  return f;
}

}  // namespace dysthe
