#pragma once

// Complex scalar fields on a periodic grid, in physical or spectral
// representation, plus uniformly sampled space-time fields for mixed-norm
// and modulation-space computations.
//
// Spectral convention: unitary symmetric DFT pair,
//   fhat = (1/sqrt(n)) sum f exp(-i k.x),  f = (1/sqrt(n)) sum fhat exp(+i k.x),
// so Parseval holds without extra factors and a physical<->spectral round
// trip is the identity (up to Nyquist removal on construction).

#include <complex>
#include <vector>

#include "dysthe/grid.hpp"

namespace dysthe {

using cplx = std::complex<double>;

enum class Rep { physical, spectral };

struct FieldState {
  GridPtr grid;
  Rep rep = Rep::physical;
  double time = 0.0;
  std::vector<cplx> values;  // size grid->size(), row-major over (x, y)

  static FieldState zeros(GridPtr grid, Rep rep = Rep::physical,
                          double time = 0.0);
};

// Uniformly sampled trajectory on [t0, t0 + window), nt slices, stored in
// physical space-time representation; slice it is at t0 + it*window/nt.
// Values are row-major over (t, x, y).
struct SpaceTimeField {
  GridPtr grid;
  int nt = 0;
  double t0 = 0.0;
  double window = 0.0;

  std::vector<cplx> values;  // size nt * grid->size()

  static SpaceTimeField zeros(GridPtr grid, int nt, double t0, double window);

  double time_of(int it) const { return t0 + it * window / nt; }
  double dt() const { return window / nt; }
  std::size_t slice_offset(int it) const { return it * grid->size(); }
};

// Throws std::invalid_argument unless the field is self-consistent
// (non-null grid, matching value count).
void check_field(const FieldState& f);
void check_field(const SpaceTimeField& f);

}  // namespace dysthe
