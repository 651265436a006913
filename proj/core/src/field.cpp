#include "dysthe/field.hpp"

#include <stdexcept>

namespace dysthe {

FieldState FieldState::zeros(GridPtr grid, Rep rep, double time) {
  if (!grid) {
    throw std::invalid_argument("field: null grid");
  }
  FieldState f;
  f.grid = std::move(grid);
  f.rep = rep;
  f.time = time;
  f.values.assign(f.grid->size(), cplx{0.0, 0.0});
  return f;
}

SpaceTimeField SpaceTimeField::zeros(GridPtr grid, int nt, double t0,
                                     double window) {
  if (!grid) {
    throw std::invalid_argument("spacetime field: null grid");
  }
  if (nt < 4) {
    throw std::invalid_argument("spacetime field: nt must be >= 4");
  }
  if (!(window > 0.0)) {
    throw std::invalid_argument("spacetime field: window must be positive");
  }
  SpaceTimeField u;
  u.grid = std::move(grid);
  u.nt = nt;
  u.t0 = t0;
  u.window = window;
  u.values.assign(static_cast<std::size_t>(nt) * u.grid->size(),
                  cplx{0.0, 0.0});
  return u;
}

void check_field(const FieldState& f) {
  if (!f.grid) {
    throw std::invalid_argument("field: null grid");
  }
  if (f.values.size() != f.grid->size()) {
    throw std::invalid_argument("field: value count does not match grid");
  }
}

void check_field(const SpaceTimeField& f) {
  if (!f.grid) {
    throw std::invalid_argument("spacetime field: null grid");
  }
  if (f.nt < 4 || !(f.window > 0.0)) {
    throw std::invalid_argument("spacetime field: invalid time sampling");
  }
  if (f.values.size() != static_cast<std::size_t>(f.nt) * f.grid->size()) {
    throw std::invalid_argument(
        "spacetime field: value count does not match grid and nt");
  }
}

}  // namespace dysthe
