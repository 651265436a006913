#include "dysthe/runner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "dysthe/airy.hpp"
#include "dysthe/config.hpp"
#include "dysthe/estimates.hpp"
#include "dysthe/evolve.hpp"
#include "dysthe/init.hpp"
#include "dysthe/io.hpp"
#include "dysthe/models.hpp"
#include "dysthe/norms.hpp"
#include "dysthe/spectral.hpp"
#include "dysthe/symbols.hpp"
#include "dysthe/transforms.hpp"

namespace dysthe {

namespace {

GridPtr grid_from(const RunConfig& cfg) {
  if (cfg.grid.nx <= 0 || !(cfg.grid.Lx > 0.0)) {
    throw std::invalid_argument("config: grid.nx and grid.Lx are required");
  }
  if (cfg.kind == ModelKind::Dysthe1D) {
    return make_grid_1d(cfg.grid.nx, cfg.grid.Lx);
  }
  const int ny = cfg.grid.ny > 0 ? cfg.grid.ny : cfg.grid.nx;
  const double Ly = cfg.grid.Ly > 0.0 ? cfg.grid.Ly : cfg.grid.Lx;
  return make_grid(cfg.grid.nx, ny, cfg.grid.Lx, Ly);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

// L^2 distance of two states on the same grid and representation.
double l2_difference(const FieldState& a, const FieldState& b) {
  if (!same_grid(*a.grid, *b.grid) || a.rep != b.rep) {
    throw std::invalid_argument(
        "difference: fields live on different grids or representations");
  }
  FieldState d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
  return l2_norm(d);
}

int cmd_simulate(const RunConfig& cfg) {
  const GridPtr grid = grid_from(cfg);
  const ModelSpec spec = assemble(cfg.kind, cfg.params, grid);
  const FieldState u0 = build_initial_state(cfg.init, grid);

  EvolveOptions opt;
  opt.scheme = cfg.scheme;
  opt.dt = cfg.dt;
  opt.T = cfg.T;
  opt.snapshot_every = cfg.output.snapshot_every;
  opt.diag_every = cfg.output.diag_every;
  opt.snapshot_times = cfg.output.snapshot_times;
  opt.blowup_linf = cfg.blowup_linf;
  const Trajectory traj = evolve(spec, u0, opt);

  CsvWriter diag(join_path(cfg.output.dir, "diagnostics.csv"),
                 {"t", "mass", "h1_norm", "edge_mass", "linf"});
  for (const DiagRow& r : traj.diagnostics) {
    diag.row({r.t, r.mass, r.h1, r.edge_mass, r.linf});
  }
  diag.close();

  if (cfg.output.write_snapshots) {
    CsvWriter index(join_path(cfg.output.dir, "snapshots.csv"),
                    {"index", "t", "file"});
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "snap_%04zu.dat", i);
      write_snapshot(traj.snapshots[i], join_path(cfg.output.dir, name));
      index.text_row({std::to_string(i), format_double(traj.snapshot_times[i]),
                      name});
    }
    index.close();
  }

  if (traj.aborted) {
    std::printf("simulate: aborted (%s)\n", traj.reason.c_str());
    return 1;
  }
  double drift = 0.0;
  if (traj.diagnostics.size() >= 2 && traj.diagnostics.front().mass > 0.0) {
    drift = std::abs(traj.diagnostics.back().mass -
                     traj.diagnostics.front().mass) /
            traj.diagnostics.front().mass;
  }
  std::printf("simulate: reached t=%s, relative mass drift %s\n",
              format_double(traj.snapshots.back().time).c_str(),
              format_double(drift).c_str());
  write_done(cfg.output.dir);
  return 0;
}

int cmd_verify_cov(const RunConfig& cfg) {
  if (!cfg.params.alpha) {
    throw std::invalid_argument(
        "verify-cov: model.alpha (the general dispersion triple) is required");
  }
  const std::array<double, 3> alpha = *cfg.params.alpha;
  if (!(alpha[0] > 0.0)) {
    throw std::invalid_argument(
        "verify-cov: alpha1 must be positive to march both sides forward");
  }
  const GridPtr grid = grid_from(cfg);
  const ModelSpec spec_v = assemble(cfg.kind, cfg.params, grid);
  const CovCoefficients cov = cov_coefficients(alpha[0], alpha[1], alpha[2]);

  ModelParams pu = cfg.params;
  pu.alpha = std::array<double, 3>{1.0, 0.0, 0.0};
  pu.c = remap_nonlinear_coeffs(spec_v.c, cov.a2, alpha[0]);
  const ModelSpec spec_u = assemble(cfg.kind, pu, grid);

  FieldState v = to_spectral(build_initial_state(cfg.init, grid));
  FieldState u = to_spectral(apply_cov(v, alpha));

  const long steps = std::max(1L, std::lround(cfg.T / cfg.dt));
  const double dtu = cfg.T / static_cast<double>(steps);
  const StepTables tab_u = make_step_tables(spec_u, cfg.scheme, dtu);
  const StepTables tab_v = make_step_tables(spec_v, cfg.scheme, dtu / alpha[0]);

  CsvWriter csv(join_path(cfg.output.dir, "cov.csv"), {"t", "l2_diff"});
  double sup = 0.0;
  const auto compare = [&]() {
    const FieldState w = apply_cov(v, alpha);
    const double d = l2_difference(u, w);
    csv.row({u.time, d});
    sup = std::max(sup, d);
  };
  compare();
  const int every = std::max(1, cfg.cov.compare_every);
  for (long s = 1; s <= steps; ++s) {
    u = step(spec_u, tab_u, u);
    v = step(spec_v, tab_v, v);
    u.time = static_cast<double>(s) * dtu;
    v.time = static_cast<double>(s) * dtu / alpha[0];
    if (s % every == 0 || s == steps) compare();
  }
  csv.close();

  const bool pass = sup <= cfg.cov.tolerance;
  std::printf("verify-cov: sup l2 difference %s (tolerance %s) -> %s\n",
              format_double(sup).c_str(),
              format_double(cfg.cov.tolerance).c_str(),
              pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_verify_scaling(const RunConfig& cfg) {
  const GridPtr grid = grid_from(cfg);
  const ModelSpec spec = assemble(cfg.kind, cfg.params, grid);
  if (spec.c[0] != cplx(0.0)) {
    std::fprintf(stderr,
                 "verify-scaling: warning: the cubic-power term scales "
                 "differently; expect a mismatch unless c1 = 0\n");
  }
  if (spec.nonlocal == NonlocalKind::depth && spec.c[3] != cplx(0.0)) {
    std::fprintf(stderr,
                 "verify-scaling: warning: the finite-depth operator is not "
                 "scale-invariant\n");
  }
  const double lambda = cfg.scaling.lambda;
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("verify-scaling: lambda must be positive");
  }

  const FieldState u0 = build_initial_state(cfg.init, grid);
  EvolveOptions opt;
  opt.scheme = cfg.scheme;
  opt.dt = cfg.dt;
  opt.T = cfg.T;
  opt.blowup_linf = cfg.blowup_linf;
  const Trajectory base = evolve(spec, u0, opt);
  if (base.aborted) {
    std::printf("verify-scaling: base run aborted (%s)\n", base.reason.c_str());
    return 1;
  }

  const FieldState u0s = scale_field(u0, lambda);
  const ModelSpec spec_s = assemble(cfg.kind, cfg.params, u0s.grid);
  const double l3 = lambda * lambda * lambda;
  EvolveOptions opt_s = opt;
  opt_s.dt = cfg.dt / l3;
  opt_s.T = cfg.T / l3;
  const Trajectory scaled = evolve(spec_s, u0s, opt_s);
  if (scaled.aborted) {
    std::printf("verify-scaling: rescaled run aborted (%s)\n",
                scaled.reason.c_str());
    return 1;
  }

  const FieldState mapped =
      to_spectral(scale_field(to_physical(base.snapshots.back()), lambda));
  const FieldState got = to_spectral(scaled.snapshots.back());
  const double diff = l2_difference(mapped, got);

  CsvWriter csv(join_path(cfg.output.dir, "scaling.csv"),
                {"lambda", "l2_diff", "tolerance"});
  csv.row({lambda, diff, cfg.scaling.tolerance});
  csv.close();

  const bool pass = diff <= cfg.scaling.tolerance;
  std::printf("verify-scaling: l2 difference %s at lambda=%s (tolerance %s) -> %s\n",
              format_double(diff).c_str(), format_double(lambda).c_str(),
              format_double(cfg.scaling.tolerance).c_str(),
              pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_strichartz(const RunConfig& cfg) {
  const GridPtr grid = grid_from(cfg);
  const ModelSpec spec = assemble(cfg.kind, cfg.params, grid);
  const FieldState phi = build_initial_state(cfg.init, grid);
  const StrichartzConfig& sc = cfg.strichartz;

  const double base = strichartz_ratio(spec, phi, sc.t_window, sc.nt);

  const int rf = std::max(2, sc.refine);
  const GridPtr grid_f =
      grid->one_dim
          ? make_grid_1d(grid->nx * rf, grid->Lx)
          : make_grid(grid->nx * rf, grid->ny * rf, grid->Lx, grid->Ly);
  const ModelSpec spec_f = assemble(cfg.kind, cfg.params, grid_f);
  const FieldState phi_f = build_initial_state(cfg.init, grid_f);
  const double fine = strichartz_ratio(spec_f, phi_f, sc.t_window, sc.nt);
  const double rel_refine = std::abs(fine - base) / base;

  const double lam = sc.lambda;
  if (!(lam > 0.0)) {
    throw std::invalid_argument("estimate-strichartz: lambda must be positive");
  }
  const FieldState phi_s = scale_field(phi, lam);
  const ModelSpec spec_s = assemble(cfg.kind, cfg.params, phi_s.grid);
  const double scaled =
      strichartz_ratio(spec_s, phi_s, sc.t_window / (lam * lam * lam), sc.nt);
  const double rel_scale = std::abs(scaled - base) / base;

  CsvWriter csv(join_path(cfg.output.dir, "strichartz.csv"),
                {"quantity", "value"});
  csv.text_row({"ratio_base", format_double(base)});
  csv.text_row({"ratio_refined", format_double(fine)});
  csv.text_row({"rel_change_refine", format_double(rel_refine)});
  csv.text_row({"ratio_rescaled", format_double(scaled)});
  csv.text_row({"rel_change_rescale", format_double(rel_scale)});
  for (double band : sc.bands) {
    const double r = l4_band_ratio(spec, phi, band, sc.t_window, sc.nt);
    csv.text_row({"band_" + format_double(band), format_double(r)});
  }
  csv.close();

  const bool pass =
      rel_refine <= sc.tolerance_refine && rel_scale <= sc.tolerance_scale;
  std::printf(
      "estimate-strichartz: ratio %s, refinement change %s (tol %s), "
      "rescale change %s (tol %s) -> %s\n",
      format_double(base).c_str(), format_double(rel_refine).c_str(),
      format_double(sc.tolerance_refine).c_str(),
      format_double(rel_scale).c_str(),
      format_double(sc.tolerance_scale).c_str(), pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_bilinear(const RunConfig& cfg) {
  const BilinearConfig& bc = cfg.bilinear;
  if (bc.n1.size() < 2) {
    throw std::invalid_argument(
        "estimate-bilinear: need at least two n1 values to fit a slope");
  }
  if (bc.draws < 1) {
    throw std::invalid_argument("estimate-bilinear: bilinear.draws must be >= 1");
  }
  const double L = 2.0 * std::numbers::pi;

  CsvWriter csv(join_path(cfg.output.dir, "bilinear.csv"),
                {"n1", "mean_ratio", "min_ratio", "max_ratio", "share_high",
                 "share_mid", "share_low"});
  std::vector<double> xs;
  std::vector<double> ys;
  for (double n1 : bc.n1) {
    int nx = 64;
    while (static_cast<double>(nx) < 4.0 * n1) nx *= 2;
    const GridPtr grid = make_grid(nx, nx, L, L);
    const ModelSpec spec = assemble(cfg.kind, cfg.params, grid);
    const double T =
        bc.window_scale * L / (3.0 * (n1 * n1 - bc.n2 * bc.n2));
    double sum = 0.0;
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    BilinearCaseBins bins{};
    for (int d = 0; d < bc.draws; ++d) {
      const std::uint64_t salt = 2ull * static_cast<std::uint64_t>(d);
      const FieldState p1 = bilinear_packet(grid, n1, cfg.seed, salt);
      const FieldState p2 = bilinear_strip(grid, bc.n2, cfg.seed, salt + 1);
      const double r = bilinear_ratio(spec, p1, n1, p2, bc.n2, T, bc.nt);
      sum += r;
      mn = std::min(mn, r);
      mx = std::max(mx, r);
      if (d == 0) bins = bilinear_case_bins(spec, p1, n1, p2, bc.n2, T, bc.nt);
    }
    const double mean = sum / static_cast<double>(bc.draws);
    csv.row({n1, mean, mn, mx, bins.high, bins.mid, bins.low});
    xs.push_back(n1);
    ys.push_back(mean);
  }
  csv.close();

  const double slope = loglog_slope(xs, ys);
  CsvWriter summary(join_path(cfg.output.dir, "bilinear_summary.csv"),
                    {"slope", "slope_tol"});
  summary.row({slope, bc.slope_tol});
  summary.close();

  const bool pass = std::abs(slope) <= bc.slope_tol;
  std::printf("estimate-bilinear: log-log slope %s over n1 (tolerance %s) -> %s\n",
              format_double(slope).c_str(), format_double(bc.slope_tol).c_str(),
              pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_scattering(const RunConfig& cfg) {
  const ScatteringConfig& sc = cfg.scattering;
  if (sc.times.size() < 3) {
    throw std::invalid_argument(
        "scattering: need at least three snapshot times");
  }
  const GridPtr grid = grid_from(cfg);
  const ModelSpec spec = assemble(cfg.kind, cfg.params, grid);
  const FieldState u0 = build_initial_state(cfg.init, grid);

  EvolveOptions opt;
  opt.scheme = cfg.scheme;
  opt.dt = cfg.dt;
  opt.T = *std::max_element(sc.times.begin(), sc.times.end());
  opt.snapshot_times = sc.times;
  opt.diag_every = cfg.output.diag_every;
  opt.blowup_linf = cfg.blowup_linf;
  const Trajectory traj = evolve(spec, u0, opt);
  if (traj.aborted) {
    std::printf("scattering: run aborted (%s)\n", traj.reason.c_str());
    return 1;
  }

  const ScatteringProfile prof = scattering_profile(spec, traj);

  CsvWriter csv(join_path(cfg.output.dir, "scattering.csv"), {"t", "l2_diff"});
  for (std::size_t i = 0; i < prof.diffs.size(); ++i) {
    csv.row({prof.times[i], prof.diffs[i]});
  }
  csv.close();

  bool decreasing = true;
  double worst_ratio = 0.0;
  for (std::size_t k = 1; k < prof.diffs.size(); ++k) {
    if (!(prof.diffs[k] < prof.diffs[k - 1])) decreasing = false;
    worst_ratio = std::max(worst_ratio, prof.diffs[k] / prof.diffs[k - 1]);
  }
  // The wrap-around guard applies to the localized objects of the
  // comparison: the initial datum and the candidate asymptotic profile.
  // The evolved snapshots themselves spread dispersive tails across the
  // box on long horizons; their edge mass is reported but not gated.
  const double edge_data = edge_mass_fraction(u0);
  const double edge_profile = edge_mass_fraction(prof.final_pullback);
  const double edge = std::max(edge_data, edge_profile);
  double edge_snapshots = 0.0;
  for (const FieldState& s : traj.snapshots) {
    edge_snapshots = std::max(edge_snapshots, edge_mass_fraction(s));
  }

  bool consistent = true;
  double extended_diff = 0.0;
  double extended_bound = 0.0;
  if (sc.extend) {
    EvolveOptions opt2 = opt;
    opt2.snapshot_times.clear();
    opt2.snapshot_every = 0;
    opt2.diag_every = 0;
    const Trajectory tail = evolve(spec, traj.snapshots.back(), opt2);
    if (tail.aborted) {
      std::printf("scattering: extended run aborted (%s)\n",
                  tail.reason.c_str());
      return 1;
    }
    const FieldState predicted = linear_propagate(
        spec, prof.final_pullback, tail.snapshots.back().time);
    extended_diff = l2_difference(to_spectral(tail.snapshots.back()),
                                  to_spectral(predicted));
    extended_bound = 10.0 * prof.diffs.back();
    consistent = extended_diff <= extended_bound;
  }

  CsvWriter summary(join_path(cfg.output.dir, "scattering_summary.csv"),
                    {"decreasing", "worst_ratio", "ratio_max", "edge_mass",
                     "edge_max", "edge_snapshots", "extended_diff",
                     "extended_bound"});
  summary.row({decreasing ? 1.0 : 0.0, worst_ratio, sc.ratio_max, edge,
               sc.edge_max, edge_snapshots, extended_diff, extended_bound});
  summary.close();

  const bool pass =
      decreasing && worst_ratio <= sc.ratio_max && edge <= sc.edge_max &&
      consistent;
  std::printf(
      "scattering: diffs %s, worst ratio %s (max %s), edge mass %s (max %s, "
      "snapshot max %s)%s -> %s\n",
      decreasing ? "strictly decreasing" : "NOT decreasing",
      format_double(worst_ratio).c_str(), format_double(sc.ratio_max).c_str(),
      format_double(edge).c_str(), format_double(sc.edge_max).c_str(),
      format_double(edge_snapshots).c_str(),
      sc.extend ? (consistent ? ", extension consistent"
                              : ", extension INCONSISTENT")
                : "",
      pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_airy1d(const RunConfig& cfg) {
  if (cfg.kind != ModelKind::Dysthe1D) {
    throw std::invalid_argument(
        "airy1d: the closed-form comparison needs the one-dimensional member");
  }
  if (cfg.grid.nx <= 0 || !(cfg.grid.Lx > 0.0)) {
    throw std::invalid_argument("config: grid.nx and grid.Lx are required");
  }
  const AiryConfig& ac = cfg.airy;
  if (ac.t == 0.0) {
    throw std::invalid_argument("airy1d: airy.t must be nonzero");
  }
  const double w0 = cfg.params.omega0;
  const double k0 = cfg.params.k0;
  const double alpha = -w0 / (16.0 * k0 * k0 * k0);
  const double beta = w0 / (8.0 * k0 * k0);
  const double c0 = w0 / (2.0 * k0);

  const auto relative_error = [&](int nx) -> double {
    const GridPtr g = make_grid_1d(nx, cfg.grid.Lx);
    const ModelSpec spec = assemble(cfg.kind, cfg.params, g);
    const FieldState u0 = build_initial_state(cfg.init, g);
    const FieldState numeric =
        to_physical(linear_propagate(spec, to_spectral(u0), ac.t));
    const FieldState oracle = airy_convolve(u0, ac.t, alpha, beta, c0);
    return l2_difference(numeric, oracle) / l2_norm(oracle);
  };

  const double err = relative_error(cfg.grid.nx);
  const int rf = std::max(2, ac.refine);
  const double err_fine = relative_error(cfg.grid.nx * rf);
  const double ratio = err > 0.0 ? err_fine / err : 0.0;

  CsvWriter csv(join_path(cfg.output.dir, "airy.csv"), {"nx", "rel_l2_err"});
  csv.row({static_cast<double>(cfg.grid.nx), err});
  csv.row({static_cast<double>(cfg.grid.nx * rf), err_fine});
  csv.close();
  CsvWriter summary(join_path(cfg.output.dir, "airy_summary.csv"),
                    {"err", "err_refined", "ratio", "tolerance", "ratio_max"});
  summary.row({err, err_fine, ratio, ac.tolerance, ac.ratio_max});
  summary.close();

  const bool pass = err <= ac.tolerance && ratio <= ac.ratio_max;
  std::printf(
      "airy1d: relative l2 error %s (tolerance %s), refinement ratio %s "
      "(max %s) -> %s\n",
      format_double(err).c_str(), format_double(ac.tolerance).c_str(),
      format_double(ratio).c_str(), format_double(ac.ratio_max).c_str(),
      pass ? "pass" : "FAIL");
  if (pass) write_done(cfg.output.dir);
  return pass ? 0 : 1;
}

int cmd_coeffs(const RunConfig& cfg) {
  CsvWriter csv(join_path(cfg.output.dir, "coeffs.csv"),
                {"kappa", "p", "q", "r", "s", "gamma", "u", "v", "cg_factor"});
  for (double k : cfg.coeffs.kappa) {
    const KappaCoefficients kc = kappa_coefficients(k);
    csv.row({k, kc.p, kc.q, kc.r, kc.s, kc.gamma, kc.u, kc.v, kc.cg_factor});
  }
  csv.close();
  std::printf("coeffs: wrote %zu rows\n", cfg.coeffs.kappa.size());
  write_done(cfg.output.dir);
  return 0;
}

}  // namespace

int run_subcommand(const std::string& subcommand, const RunConfig& config) {
  std::filesystem::create_directories(config.output.dir);
  write_manifest(config.output.dir, config.echo, config.seed);
  if (subcommand == "simulate") return cmd_simulate(config);
  if (subcommand == "verify-cov") return cmd_verify_cov(config);
  if (subcommand == "verify-scaling") return cmd_verify_scaling(config);
  if (subcommand == "estimate-strichartz") return cmd_strichartz(config);
  if (subcommand == "estimate-bilinear") return cmd_bilinear(config);
  if (subcommand == "scattering") return cmd_scattering(config);
  if (subcommand == "airy1d") return cmd_airy1d(config);
  if (subcommand == "coeffs") return cmd_coeffs(config);
  throw std::invalid_argument("unknown subcommand '" + subcommand + "'");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"pseudospectral harness for higher-order envelope models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;

  const std::array<std::pair<const char*, const char*>, 8> subcommands{{
      {"simulate", "integrate a configured model and write diagnostics"},
      {"verify-cov",
       "compare evolutions across the normalizing change of variables"},
      {"verify-scaling", "compare evolutions across the scaling symmetry"},
      {"estimate-strichartz",
       "measure the smoothing-estimate constant and its stability"},
      {"estimate-bilinear",
       "measure the bilinear interaction constant across frequency bands"},
      {"scattering",
       "pull back snapshots by the free group and profile the differences"},
      {"airy1d", "compare the 1D linear solver against the closed-form kernel"},
      {"coeffs", "tabulate the depth-ratio coefficient family"},
  }};
  for (const auto& [name, description] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "INI config file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "override the output directory");
    sub->add_option("--seed", seed, "override the RNG seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    RunConfig cfg = parse_config_file(config_path);
    if (active->count("--out") > 0) cfg.output.dir = out_dir;
    if (active->count("--seed") > 0) cfg.seed = seed;
    return run_subcommand(active->get_name(), cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace dysthe
