#pragma once

// Periodic rectangular collocation grid with its discrete Fourier lattice.
//
// Physical samples: x_i = -Lx/2 + i*Lx/nx, y_j = -Ly/2 + j*Ly/ny.
// Fourier lattice in FFT natural order: mode index i maps to the signed
// integer m = i < n/2 ? i : i - n, with frequency 2*pi*m/L.  The Nyquist
// row/column (m = -n/2) is treated as unrepresentable and is zeroed whenever
// spectral data is constructed.

#include <memory>
#include <stdexcept>
#include <vector>

namespace dysthe {

struct SpectralGrid {
  int nx = 0;
  int ny = 0;        // 1 for one-dimensional grids
  double Lx = 0.0;
  double Ly = 0.0;   // 1.0 for one-dimensional grids so cell_area() = Lx/nx
  bool one_dim = false;

  std::vector<double> xi;  // frequencies along x, FFT natural order (size nx)
  std::vector<double> mu;  // frequencies along y, FFT natural order (size ny)
  std::vector<double> x;   // physical x samples (size nx)
  std::vector<double> y;   // physical y samples (size ny)

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  // Row-major over (x, y): x is the outer (slow) dimension.
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * ny + iy;
  }
  double cell_area() const { return Lx * Ly / static_cast<double>(size()); }

  bool is_nyquist(int ix, int iy) const {
    return ix == nx / 2 || (!one_dim && iy == ny / 2);
  }
  // Largest frequency magnitude representable after Nyquist removal.
  double max_radius() const;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

// Two-dimensional grid; nx, ny must be even and >= 8; Lx, Ly > 0.
GridPtr make_grid(int nx, int ny, double Lx, double Ly);

// One-dimensional grid (ny = 1, Ly = 1); nx even and >= 8; Lx > 0.
GridPtr make_grid_1d(int nx, double Lx);

// True if the two grids have identical shape and box (used to validate
// binary operations between fields).
bool same_grid(const SpectralGrid& a, const SpectralGrid& b);

}  // namespace dysthe
