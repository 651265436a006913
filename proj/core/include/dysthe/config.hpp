#pragma once

// Declarative run configuration: INI-style sections with typed keys.
// Unknown keys are hard errors (no silent typos); absent optional keys get
// the documented defaults.  Real literals accept a trailing "pi" factor
// ("12pi" = 12*pi) and complex literals the form "a+bi" ("0.1-0.3i", "2i").

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dysthe/evolve.hpp"
#include "dysthe/models.hpp"

namespace dysthe {

struct GridConfig {
  int nx = 0;             // required
  int ny = 0;             // defaults to nx for 2D models, 1 for 1D models
  double Lx = 0.0;        // required
  double Ly = 0.0;        // defaults to Lx for 2D models
};

enum class InitKind { gaussian, plane_wave, file };

struct InitConfig {
  InitKind kind = InitKind::gaussian;
  double amplitude = 0.1;
  double sigma_x = 1.0;
  double sigma_y = 1.0;     // ignored in 1D
  double carrier_xi = 0.0;  // Gaussian carrier frequency
  double carrier_mu = 0.0;
  double l2_norm = 0.0;     // if > 0, rescale the data to this L^2 norm
  int mode_x = 1;           // plane-wave lattice mode indices
  int mode_y = 0;
  std::string path;         // snapshot file for kind == file
};

struct OutputConfig {
  std::string dir = "out";
  int snapshot_every = 0;  // steps between kept snapshots (0 = endpoints)
  int diag_every = 100;    // steps between diagnostic rows (0 = off)
  std::vector<double> snapshot_times;  // explicit times override cadence
  bool write_snapshots = true;
};

// Parameters of the verification/estimate subcommands.  Each section is
// optional in the config; defaults reproduce the documented experiments.
struct CovConfig {
  int compare_every = 100;   // steps between comparison times
  double tolerance = 1e-6;   // sup-difference bound for the exit status
};

struct ScalingConfig {
  double lambda = 2.0;
  double tolerance = 1e-6;
};

struct StrichartzConfig {
  double t_window = 1.0;
  int nt = 64;
  int refine = 2;                 // grid-refinement factor for stability
  double lambda = 2.0;            // rescale-invariance factor
  double tolerance_refine = 0.05;
  double tolerance_scale = 0.02;
  std::vector<double> bands;      // optional per-band L^4 constants
};

struct BilinearConfig {
  double n2 = 2.0;
  std::vector<double> n1{8.0, 16.0, 32.0, 64.0, 128.0};
  int draws = 20;
  int nt = 48;
  // Window T = scale * Lx / (3 (N1^2 - N2^2)); at scale = 1 the packet
  // sweeps the companion exactly twice in its co-moving frame.
  double window_scale = 1.0;
  double slope_tol = 0.15;
};

struct ScatteringConfig {
  std::vector<double> times{1.0, 2.0, 4.0, 8.0};
  double ratio_max = 0.5;   // bound on consecutive difference ratios
  double edge_max = 1e-6;   // wrap-around guard on the edge mass of the
                            // initial datum and of the final pullback
  bool extend = true;       // run the doubled-horizon self-consistency check
};

struct AiryConfig {
  double t = 1.0;
  int refine = 2;
  double tolerance = 1e-4;
  double ratio_max = 0.65;  // refinement must at least roughly halve
};

struct CoeffsConfig {
  std::vector<double> kappa{0.0};
};

struct RunConfig {
  ModelKind kind = ModelKind::NormalizedDysthe;
  ModelParams params;
  GridConfig grid;
  Scheme scheme = Scheme::etdrk4;
  double dt = 1e-3;
  double T = 1.0;
  double blowup_linf = 1e6;
  InitConfig init;
  OutputConfig output;
  std::uint64_t seed = 1;
  CovConfig cov;
  ScalingConfig scaling;
  StrichartzConfig strichartz;
  BilinearConfig bilinear;
  ScatteringConfig scattering;
  AiryConfig airy;
  CoeffsConfig coeffs;
  std::string echo;  // verbatim config text, echoed into the manifest
};

// Parse the documented schema; throws std::invalid_argument naming the
// offending section.key on unknown sections/keys or bad literals.  Required
// keys (grid sizes etc.) are checked by the subcommand that consumes them.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Literal parsers (exposed for tests): reals with optional "pi" suffix and
// "a+bi" complex literals.
double parse_real_literal(const std::string& text);
cplx parse_complex_literal(const std::string& text);

}  // namespace dysthe
