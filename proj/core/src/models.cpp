#include "dysthe/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dysthe/fft.hpp"
#include "dysthe/spectral.hpp"
#include "dysthe/symbols.hpp"

namespace dysthe {
namespace {

// x-derivative, returned in spectral representation.
FieldState deriv_x(const FieldState& u) {
  FieldState hat = to_spectral(u);
  const auto& g = *hat.grid;
  for (int ix = 0; ix < g.nx; ++ix) {
    const cplx factor(0.0, g.xi[ix]);
    for (int iy = 0; iy < g.ny; ++iy) hat.values[g.index(ix, iy)] *= factor;
  }
  return hat;
}

FieldState conj_field(const FieldState& f) {
  FieldState p = to_physical(f);
  for (cplx& v : p.values) v = std::conj(v);
  return p;
}

// Exact banded product: both factors are spread onto a 2x zero-padded grid,
// multiplied there, and the result is projected back onto the original band
// (so no aliased energy ever folds in).  Returns a spectral field.
FieldState padded_product(const FieldState& a, const FieldState& b) {
  const auto& g = *a.grid;
  const FieldState ah = to_spectral(a);
  const FieldState bh = to_spectral(b);
  const int px = 2 * g.nx;
  const int py = g.one_dim ? 1 : 2 * g.ny;
  const double scale =
      std::sqrt(static_cast<double>(px) * py / (static_cast<double>(g.nx) * g.ny));

  auto big_index = [&](int ix, int iy) -> std::size_t {
    const int bx = ix < g.nx / 2 ? ix : ix + px - g.nx;
    const int by = g.ny == 1 ? 0 : (iy < g.ny / 2 ? iy : iy + py - g.ny);
    return static_cast<std::size_t>(bx) * py + by;
  };

  const std::size_t big = static_cast<std::size_t>(px) * py;
  std::vector<cplx> abig(big, cplx(0.0)), bbig(big, cplx(0.0));
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      abig[big_index(ix, iy)] = ah.values[g.index(ix, iy)] * scale;
      bbig[big_index(ix, iy)] = bh.values[g.index(ix, iy)] * scale;
    }
  }
  std::vector<cplx> apad(big), bpad(big);
  detail::dft2(abig.data(), apad.data(), px, py, +1);
  detail::dft2(bbig.data(), bpad.data(), px, py, +1);
  for (std::size_t i = 0; i < big; ++i) apad[i] *= bpad[i];
  detail::dft2(apad.data(), abig.data(), px, py, -1);

  FieldState out = FieldState::zeros(a.grid, Rep::spectral);
  out.time = a.time;
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      if (g.is_nyquist(ix, iy)) continue;
      out.values[g.index(ix, iy)] = abig[big_index(ix, iy)] / scale;
    }
  }
  return out;
}

// One pairwise product under the model's aliasing policy; physical result.
FieldState model_product(const ModelSpec& spec, const FieldState& a,
                         const FieldState& b) {
  if (spec.exact_products) return to_physical(padded_product(a, b));
  const FieldState ap = to_physical(a);
  const FieldState bp = to_physical(b);
  FieldState out = ap;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = ap.values[i] * bp.values[i];
  }
  if (spec.dealias_products) out = dealias(out);
  return out;
}

// Composed symbol of d_x applied after the model's nonlocal operator.
double nonlocal_dx_symbol(const ModelSpec& spec, double xi, double mu) {
  switch (spec.nonlocal) {
    case NonlocalKind::none:
      return 0.0;
    case NonlocalKind::riesz_x:
      return riesz_dx_symbol(xi, mu);
    case NonlocalKind::depth:
      return spec.grid->one_dim ? finite_depth_dx_symbol_1d(xi, spec.h)
                                : finite_depth_dx_symbol(xi, mu, spec.h);
  }
  throw std::logic_error("nonlocal operator: unknown kind");
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string("model assembly: ") + what +
                                " must be positive");
  }
}

}  // namespace

double model_omega(const ModelSpec& spec, double xi, double mu) {
  const double xi2 = xi * xi;
  const double mu2 = mu * mu;
  switch (spec.kind) {
    case ModelKind::NormalizedDysthe:
    case ModelKind::FullDysthe:
      return omega_symbol(xi, mu, spec.alpha[0], spec.alpha[1], spec.alpha[2]);
    case ModelKind::FiniteDepthDysthe: {
      const double w0 = spec.params.omega0;
      const double k0 = spec.params.k0;
      return -(w0 / (2.0 * k0)) * xi + (w0 / (8.0 * k0 * k0)) * xi2 -
             (w0 / (4.0 * k0 * k0)) * mu2 -
             (w0 / (16.0 * k0 * k0 * k0)) * xi * xi2 +
             (6.0 * w0 / (16.0 * k0 * k0 * k0)) * xi * mu2;
    }
    case ModelKind::GravityCapillary: {
      const KappaCoefficients kc = kappa_coefficients(spec.params.kappa);
      return 0.5 * kc.r * xi * xi2 + 0.5 * kc.s * xi * mu2 -
             0.5 * kc.p * xi2 - 0.5 * kc.q * mu2 - 0.5 * kc.cg_factor * xi;
    }
    case ModelKind::KappaInfinity:
      return -1.5 * xi - 0.375 * xi2 - 0.75 * mu2 + (1.0 / 16.0) * xi * xi2 +
             0.375 * xi * mu2;
    case ModelKind::Dysthe1D: {
      const double w0 = spec.params.omega0;
      const double k0 = spec.params.k0;
      const double a = -w0 / (16.0 * k0 * k0 * k0);
      const double b = w0 / (8.0 * k0 * k0);
      return a * xi * xi2 + b * xi2 - (w0 / (2.0 * k0)) * xi;
    }
    case ModelKind::TrulsenDysthe:
      return -0.5 * xi + 0.125 * xi2 - 0.25 * mu2 - (1.0 / 16.0) * xi * xi2 +
             0.375 * xi * mu2 + (5.0 / 128.0) * xi2 * xi2 -
             (15.0 / 32.0) * xi2 * mu2 + (3.0 / 32.0) * mu2 * mu2 -
             (7.0 / 256.0) * xi * xi2 * xi2 + (35.0 / 64.0) * xi * xi2 * mu2 -
             (21.0 / 64.0) * xi * mu2 * mu2;
  }
  throw std::logic_error("model dispersion: unknown kind");
}

ModelSpec assemble(ModelKind kind, const ModelParams& params,
                   const GridPtr& grid) {
  if (!grid) throw std::invalid_argument("model assembly: null grid");
  const bool needs_1d = (kind == ModelKind::Dysthe1D);
  if (needs_1d != grid->one_dim) {
    throw std::invalid_argument(
        needs_1d ? "model assembly: this member requires a 1D grid"
                 : "model assembly: this member requires a 2D grid");
  }

  ModelSpec spec;
  spec.kind = kind;
  spec.grid = grid;
  spec.params = params;
  spec.dealias_products = params.dealias_products;
  spec.exact_products = params.exact_products;

  const double w0 = params.omega0;
  const double k0 = params.k0;

  switch (kind) {
    case ModelKind::NormalizedDysthe:
      spec.alpha = {1.0, 0.0, 0.0};
      spec.nonlocal = NonlocalKind::riesz_x;
      spec.c = {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)};
      break;
    case ModelKind::FullDysthe:
      spec.alpha = {-1.0 / 16.0, 1.0 / 8.0, 1.0 / 2.0};
      spec.nonlocal = NonlocalKind::riesz_x;
      spec.c = {cplx(0.0, -2.0), cplx(-6.0), cplx(1.0), cplx(0.0, 2.0)};
      break;
    case ModelKind::FiniteDepthDysthe:
      require_positive(w0, "omega0");
      require_positive(k0, "k0");
      require_positive(params.h, "h");
      spec.nonlocal = NonlocalKind::depth;
      spec.h = params.h;
      spec.c = {cplx(0.0, -0.5 * w0 * k0 * k0), cplx(-1.5 * w0 * k0),
                cplx(0.25 * w0 * k0), cplx(0.0, -0.5 * w0 * k0)};
      break;
    case ModelKind::GravityCapillary: {
      const KappaCoefficients kc = kappa_coefficients(params.kappa);
      spec.nonlocal = NonlocalKind::riesz_x;
      spec.c = {cplx(0.0, -0.5 * kc.gamma), cplx(0.5 * kc.v), cplx(-0.5 * kc.u),
                cplx(0.0, -0.5 * params.gc_n4_scale)};
      break;
    }
    case ModelKind::KappaInfinity:
      spec.nonlocal = NonlocalKind::riesz_x;
      spec.c = {cplx(0.0, 1.0 / 16.0), cplx(3.0 / 16.0), cplx(-1.0 / 32.0),
                cplx(0.0, -0.5)};
      break;
    case ModelKind::Dysthe1D:
      require_positive(w0, "omega0");
      require_positive(k0, "k0");
      require_positive(params.h, "h");
      spec.nonlocal = NonlocalKind::depth;
      spec.h = params.h;
      spec.c = {cplx(0.0, -0.5 * w0 * k0 * k0), cplx(-1.5 * w0 * k0),
                cplx(0.25 * w0 * k0), cplx(0.0, -0.5 * w0 * k0)};
      break;
    case ModelKind::TrulsenDysthe:
      require_positive(params.h, "h");
      spec.nonlocal = NonlocalKind::depth;
      spec.h = params.h;
      spec.c = {cplx(0.0, -0.5), cplx(-1.5), cplx(0.25), cplx(0.0, -0.5)};
      break;
  }

  if (params.alpha) {
    if (kind != ModelKind::NormalizedDysthe && kind != ModelKind::FullDysthe) {
      throw std::invalid_argument(
          "model assembly: dispersion override applies only to the cubic "
          "dispersion members");
    }
    spec.alpha = *params.alpha;
  }
  if (params.c) spec.c = *params.c;

  const auto& g = *grid;
  spec.omega.resize(g.size());
  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      spec.omega[g.index(ix, iy)] = model_omega(spec, g.xi[ix], g.mu[iy]);
    }
  }
  return spec;
}

FieldState nonlinear_term(const ModelSpec& spec, const FieldState& u, int j) {
  check_field(u);
  if (!spec.grid || !same_grid(*u.grid, *spec.grid)) {
    throw std::invalid_argument("nonlinear term: field grid does not match model");
  }
  const FieldState up = to_physical(u);
  switch (j) {
    case 1: {
      const FieldState m = model_product(spec, up, conj_field(up));
      return to_spectral(model_product(spec, m, up));
    }
    case 2: {
      const FieldState m = model_product(spec, up, conj_field(up));
      return to_spectral(model_product(spec, m, to_physical(deriv_x(u))));
    }
    case 3: {
      const FieldState p = model_product(spec, up, conj_field(deriv_x(u)));
      return to_spectral(model_product(spec, up, p));
    }
    case 4: {
      if (spec.nonlocal == NonlocalKind::none) {
        FieldState out = FieldState::zeros(spec.grid, Rep::spectral);
        out.time = u.time;
        return out;
      }
      FieldState mh = to_spectral(model_product(spec, up, conj_field(up)));
      const auto& g = *spec.grid;
      for (int ix = 0; ix < g.nx; ++ix) {
        for (int iy = 0; iy < g.ny; ++iy) {
          mh.values[g.index(ix, iy)] *=
              nonlocal_dx_symbol(spec, g.xi[ix], g.mu[iy]);
        }
      }
      return to_spectral(model_product(spec, up, to_physical(mh)));
    }
    default:
      throw std::invalid_argument("nonlinear term: index must be 1..4");
  }
}

FieldState nonlinear_rhs(const ModelSpec& spec, const FieldState& u) {
  check_field(u);
  if (!spec.grid || !same_grid(*u.grid, *spec.grid)) {
    throw std::invalid_argument("nonlinear rhs: field grid does not match model");
  }
  if (spec.exact_products) {
    // Padded products are assembled term by term.
    FieldState acc = FieldState::zeros(spec.grid, Rep::spectral);
    acc.time = u.time;
    for (int j = 1; j <= 4; ++j) {
      const cplx cj = spec.c[static_cast<std::size_t>(j - 1)];
      if (cj == cplx(0.0)) continue;
      const FieldState term = nonlinear_term(spec, u, j);
      for (std::size_t i = 0; i < acc.values.size(); ++i) {
        acc.values[i] += cj * term.values[i];
      }
    }
    return acc;
  }

  // Fused path: shared intermediates, one closing transform.  Each final
  // monomial is a product of two already-truncated factors weighted by c_j
  // and summed pointwise; dealiasing the sum once equals dealiasing each
  // term (the truncation is linear), so this matches the per-term path.
  const auto& g = *spec.grid;
  const std::size_t n = g.size();
  const FieldState up = to_physical(u);
  const FieldState dxu = to_physical(deriv_x(u));
  const FieldState m = model_product(spec, up, conj_field(up));  // |u|^2

  FieldState combined = FieldState::zeros(spec.grid, Rep::physical);
  combined.time = u.time;
  if (spec.c[0] != cplx(0.0)) {
    for (std::size_t i = 0; i < n; ++i) {
      combined.values[i] += spec.c[0] * m.values[i] * up.values[i];
    }
  }
  if (spec.c[1] != cplx(0.0)) {
    for (std::size_t i = 0; i < n; ++i) {
      combined.values[i] += spec.c[1] * m.values[i] * dxu.values[i];
    }
  }
  if (spec.c[2] != cplx(0.0)) {
    const FieldState p = model_product(spec, up, conj_field(dxu));
    for (std::size_t i = 0; i < n; ++i) {
      combined.values[i] += spec.c[2] * up.values[i] * p.values[i];
    }
  }
  if (spec.c[3] != cplx(0.0) && spec.nonlocal != NonlocalKind::none) {
    FieldState mh = to_spectral(m);
    for (int ix = 0; ix < g.nx; ++ix) {
      for (int iy = 0; iy < g.ny; ++iy) {
        mh.values[g.index(ix, iy)] *=
            nonlocal_dx_symbol(spec, g.xi[ix], g.mu[iy]);
      }
    }
    const FieldState gp = to_physical(mh);
    for (std::size_t i = 0; i < n; ++i) {
      combined.values[i] += spec.c[3] * up.values[i] * gp.values[i];
    }
  }
  FieldState acc = to_spectral(combined);
  if (spec.dealias_products) acc = dealias(acc);
  return acc;
}

bool conserves_mass(const ModelSpec& spec) {
  return spec.c[0].real() == 0.0 && spec.c[1].imag() == 0.0 &&
         spec.c[2].imag() == 0.0 && spec.c[3].real() == 0.0;
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::NormalizedDysthe: return "normalized-dysthe";
    case ModelKind::FullDysthe: return "full-dysthe";
    case ModelKind::FiniteDepthDysthe: return "finite-depth-dysthe";
    case ModelKind::GravityCapillary: return "gravity-capillary";
    case ModelKind::KappaInfinity: return "kappa-infinity";
    case ModelKind::Dysthe1D: return "dysthe-1d";
    case ModelKind::TrulsenDysthe: return "trulsen-dysthe";
  }
  throw std::logic_error("model name: unknown kind");
}

ModelKind model_kind_from_string(const std::string& name) {
  for (ModelKind kind :
       {ModelKind::NormalizedDysthe, ModelKind::FullDysthe,
        ModelKind::FiniteDepthDysthe, ModelKind::GravityCapillary,
        ModelKind::KappaInfinity, ModelKind::Dysthe1D,
        ModelKind::TrulsenDysthe}) {
    if (model_name(kind) == name) return kind;
  }
  throw std::invalid_argument(
      "unknown model '" + name +
      "' (expected one of: normalized-dysthe, full-dysthe, "
      "finite-depth-dysthe, gravity-capillary, kappa-infinity, dysthe-1d, "
      "trulsen-dysthe)");
}

}  // namespace dysthe
