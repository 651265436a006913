#pragma once

// Model assembly for the higher-order envelope family.
//
// Every member is reduced to the common normal form
//
//   d_t u + Lin(u) = c1 |u|^2 u + c2 |u|^2 d_x u + c3 u^2 d_x conj(u)
//                  + c4 u d_x G(|u|^2),
//
// where Lin has Fourier symbol -i*omega(xi, mu) -- so each free mode evolves
// as exp(+i t omega) -- and G is either a Riesz-type transform in x or a
// finite-depth operator.  assemble() fills the per-mode omega table and the
// coefficient vector for the requested member; the integrators only ever see
// the assembled ModelSpec.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dysthe/field.hpp"

namespace dysthe {

enum class ModelKind {
  NormalizedDysthe,   // omega = w(xi, mu), unit cubic coefficient set
  FullDysthe,         // deep-water model on R_x, general (a1, a2, a3)
  FiniteDepthDysthe,  // depth-h model with nonlocal operator L_h
  GravityCapillary,   // kappa-parameterized surface-tension family
  KappaInfinity,      // kappa -> infinity limit member
  Dysthe1D,           // one-dimensional finite-depth reduction
  TrulsenDysthe,      // extended fourth/fifth-order dispersion member
};

enum class NonlocalKind {
  none,     // c4 term absent
  riesz_x,  // G has symbol -i xi / |(xi, mu)|
  depth,    // G has symbol i (xi/r) coth(h r)
};

struct ModelParams {
  double kappa = 0.0;    // gravity-capillary depth ratio parameter
  double h = 1.0;        // fluid depth for finite-depth members
  double omega0 = 1.0;   // carrier frequency scale
  double k0 = 1.0;       // carrier wavenumber scale
  double gc_n4_scale = 1.0;  // multiplies the gravity-capillary c4 term
  // Optional overrides (tests and change-of-variable runs):
  std::optional<std::array<double, 3>> alpha;  // (a1, a2, a3) dispersion
  std::optional<std::array<cplx, 4>> c;        // nonlinear coefficients
  bool dealias_products = true;  // 2/3-rule truncation after each product
  bool exact_products = false;   // zero-padded exact cubic products instead
};

struct ModelSpec {
  ModelKind kind = ModelKind::NormalizedDysthe;
  GridPtr grid;
  std::array<cplx, 4> c{};          // coefficients of N1..N4
  NonlocalKind nonlocal = NonlocalKind::none;
  double h = 1.0;                   // depth used when nonlocal == depth
  std::vector<double> omega;        // dispersion sampled on the grid
  std::array<double, 3> alpha{};    // dispersion parameters when applicable
  ModelParams params;               // parameters the member was built from
  bool dealias_products = true;
  bool exact_products = false;
};

// Continuous dispersion relation of the assembled model.
double model_omega(const ModelSpec& spec, double xi, double mu);

// Assemble a model on a grid (1D members need a 1D grid and vice versa).
ModelSpec assemble(ModelKind kind, const ModelParams& params, const GridPtr& grid);

// Single monomial N_j(u), j in 1..4, returned in spectral representation
// (accepts either representation; applies the model's dealias policy).
FieldState nonlinear_term(const ModelSpec& spec, const FieldState& u, int j);

// Full right-hand side sum_j c_j N_j(u) in spectral representation.
FieldState nonlinear_rhs(const ModelSpec& spec, const FieldState& u);

// True when the coefficient structure conserves mass exactly
// (Re c1 = Im c2 = Im c3 = Re c4 = 0).
bool conserves_mass(const ModelSpec& spec);

// Names for configs, manifests, and diagnostics.
std::string model_name(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

}  // namespace dysthe
