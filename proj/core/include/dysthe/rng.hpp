#pragma once

// Deterministic, order-independent random field generation.
//
// Every lattice site is hashed independently from (seed, draw index, site
// index) with a splitmix64-style mixer, so the generated field does not
// depend on traversal order, grid chunking, or how many draws preceded it.
// Gaussian variates come from Box-Muller applied to the hashed uniforms.

#include <cstdint>

#include "dysthe/field.hpp"

namespace dysthe {

// Uniform double in [0, 1) from a 64-bit counter hash.
double hash_uniform(std::uint64_t seed, std::uint64_t draw, std::uint64_t index);

// Standard complex Gaussian (unit variance per component) at one site.
cplx hash_gaussian(std::uint64_t seed, std::uint64_t draw, std::uint64_t index);

// Physical-space field of iid complex Gaussians, one per lattice site.
FieldState random_field(const GridPtr& grid, std::uint64_t seed, std::uint64_t draw);

// Spectral-space field of iid complex Gaussians restricted to the annulus
// lo <= |(xi, mu)| <= hi (other modes zero; Nyquist lines zeroed).
FieldState random_annulus_field(const GridPtr& grid, std::uint64_t seed,
                                std::uint64_t draw, double lo, double hi);

}  // namespace dysthe
