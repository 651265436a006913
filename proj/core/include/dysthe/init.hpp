#pragma once

// Initial-data construction from the config descriptor.

#include <cstdint>

#include "dysthe/config.hpp"
#include "dysthe/field.hpp"

namespace dysthe {

// Build the configured initial state on the grid (physical representation).
// Gaussian: amplitude * exp(-x^2/(2 sx^2) - y^2/(2 sy^2)) * e^{i(xi0 x + mu0 y)},
// optionally rescaled to a target L^2 norm.  Plane wave: A e^{i(xi_m x + mu_m y)}
// from lattice mode indices.  File: snapshot reload (grid must match).
FieldState build_initial_state(const InitConfig& init, const GridPtr& grid);

}  // namespace dysthe
