// Config grammar (INI sections, typed literals, hard errors on typos) and
// the bit-exact artifact formats (snapshots, CSV, manifest, DONE).

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "dysthe/config.hpp"
#include "dysthe/field.hpp"
#include "dysthe/grid.hpp"
#include "dysthe/init.hpp"
#include "dysthe/io.hpp"
#include "dysthe/norms.hpp"
#include "dysthe/rng.hpp"
#include "dysthe/spectral.hpp"

using namespace dysthe;
namespace fs = std::filesystem;

namespace {
constexpr double kPi = std::numbers::pi;

// Scratch directory for artifact tests, cleaned per use.
fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "dysthe_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Expects fn() to throw std::invalid_argument mentioning `needle`.
template <typename Fn>
void expect_error_mentioning(Fn&& fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected an error mentioning '" << needle << "'");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find(needle) != std::string::npos);
  }
}
}  // namespace

TEST_CASE("real literals: pi suffix, exponents, rejects") {
  CHECK(parse_real_literal("12pi") == doctest::Approx(12.0 * kPi).epsilon(1e-15));
  CHECK(parse_real_literal("pi") == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(parse_real_literal("-pi") == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK(parse_real_literal("-0.5pi") == doctest::Approx(-0.5 * kPi).epsilon(1e-15));
  CHECK(parse_real_literal("2.5e-3") == doctest::Approx(2.5e-3).epsilon(1e-15));
  CHECK(parse_real_literal("+4") == doctest::Approx(4.0).epsilon(1e-15));

  CHECK_THROWS_AS(parse_real_literal("twelve"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_literal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_literal("1.2.3"), std::invalid_argument);
}

TEST_CASE("complex literals: a+bi forms, bare units, exponent guard") {
  CHECK(parse_complex_literal("0.1-0.3i") == cplx(0.1, -0.3));
  CHECK(parse_complex_literal("2i") == cplx(0.0, 2.0));
  CHECK(parse_complex_literal("-i") == cplx(0.0, -1.0));
  CHECK(parse_complex_literal("i") == cplx(0.0, 1.0));
  CHECK(parse_complex_literal("3") == cplx(3.0, 0.0));
  CHECK(parse_complex_literal("-1.5+i") == cplx(-1.5, 1.0));
  CHECK(parse_complex_literal("1e-2+2e-3i") == cplx(0.01, 0.002));
  CHECK(parse_complex_literal("-2.5e+1-3e-1i") == cplx(-25.0, -0.3));

  CHECK_THROWS_AS(parse_complex_literal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_literal(""), std::invalid_argument);
}

TEST_CASE("config parse: sections, lists, comments, defaults") {
  const std::string text =
      "# leading comment\n"
      "[model]\n"
      "kind = gravity-capillary\n"
      "kappa = 0.25   ; inline comment\n"
      "c = 1+1i 2 3i -4.5-0.5i\n"
      "[grid]\n"
      "nx = 64\n"
      "Lx = 12pi\n"
      "[integrator]\n"
      "scheme = strang\n"
      "dt = 5e-4\n"
      "T = 0.5\n"
      "[init]\n"
      "kind = plane-wave\n"
      "mode_x = 3\n"
      "mode_y = -1\n"
      "amplitude = 0.2\n"
      "[output]\n"
      "dir = runs/demo\n"
      "snapshot_times = 0.1 0.25\n"
      "write_snapshots = false\n"
      "[run]\n"
      "seed = 12345\n";
  const RunConfig cfg = parse_config(text);

  CHECK(cfg.kind == ModelKind::GravityCapillary);
  CHECK(cfg.params.kappa == doctest::Approx(0.25).epsilon(1e-15));
  REQUIRE(cfg.params.c.has_value());
  CHECK((*cfg.params.c)[0] == cplx(1.0, 1.0));
  CHECK((*cfg.params.c)[1] == cplx(2.0, 0.0));
  CHECK((*cfg.params.c)[2] == cplx(0.0, 3.0));
  CHECK((*cfg.params.c)[3] == cplx(-4.5, -0.5));

  CHECK(cfg.grid.nx == 64);
  CHECK(cfg.grid.ny == 64);  // defaults to nx for 2D members
  CHECK(cfg.grid.Lx == doctest::Approx(12.0 * kPi).epsilon(1e-15));
  CHECK(cfg.grid.Ly == doctest::Approx(12.0 * kPi).epsilon(1e-15));

  CHECK(cfg.scheme == Scheme::strang);
  CHECK(cfg.dt == doctest::Approx(5e-4).epsilon(1e-15));
  CHECK(cfg.T == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(cfg.init.kind == InitKind::plane_wave);
  CHECK(cfg.init.mode_x == 3);
  CHECK(cfg.init.mode_y == -1);
  CHECK(cfg.init.amplitude == doctest::Approx(0.2).epsilon(1e-15));

  CHECK(cfg.output.dir == "runs/demo");
  REQUIRE(cfg.output.snapshot_times.size() == 2);
  CHECK(cfg.output.snapshot_times[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_FALSE(cfg.output.write_snapshots);

  CHECK(cfg.seed == 12345);
  CHECK(cfg.echo == text);  // verbatim echo for the manifest
}

TEST_CASE("config parse: 1D member defaults ny to 1") {
  const RunConfig cfg = parse_config(
      "[model]\nkind = dysthe-1d\nh = 1\n[grid]\nnx = 128\nLx = 40pi\n");
  CHECK(cfg.grid.ny == 1);
  CHECK(cfg.grid.Ly == doctest::Approx(40.0 * kPi).epsilon(1e-15));
}

TEST_CASE("config parse: hard errors name the offending entry") {
  expect_error_mentioning(
      [] { parse_config("[model]\nbogus_key = 1\n"); }, "model.bogus_key");
  expect_error_mentioning(
      [] { parse_config("[nonsense]\nx = 1\n"); }, "unknown section");
  expect_error_mentioning(
      [] { parse_config("nx = 4\n[grid]\n"); }, "before any [section]");
  expect_error_mentioning(
      [] { parse_config("[grid\nnx = 4\n"); }, "malformed section header");
  expect_error_mentioning(
      [] { parse_config("[grid]\nnx 4\n"); }, "expected key = value");
  expect_error_mentioning(
      [] { parse_config("[model]\nalpha = 1 2\n"); }, "exactly 3");
  expect_error_mentioning(
      [] { parse_config("[model]\nc = 1 2 3\n"); }, "exactly 4");
  expect_error_mentioning(
      [] { parse_config("[grid]\nnx = four\n"); }, "grid.nx");
  expect_error_mentioning(
      [] { parse_config("[model]\nkind = dysthe-2d\n"); }, "unknown model");
}

TEST_CASE("initial data: gaussian envelope, rescale, plane wave, file") {
  const GridPtr g = make_grid(32, 32, 16.0, 16.0);

  InitConfig gauss;
  gauss.kind = InitKind::gaussian;
  gauss.amplitude = 0.3;
  gauss.sigma_x = 2.0;
  gauss.sigma_y = 1.5;
  gauss.carrier_xi = 2.0 * kPi / 16.0;
  const FieldState f = build_initial_state(gauss, g);
  // Peak value at the center sample x = y = 0 (index n/2).
  const cplx center = f.values[g->index(16, 16)];
  CHECK(std::abs(center) == doctest::Approx(0.3).epsilon(1e-13));
  // Envelope value one sigma out in x: amplitude * exp(-1/2).
  const cplx off = f.values[g->index(20, 16)];  // x = 2
  CHECK(std::abs(off) ==
        doctest::Approx(0.3 * std::exp(-0.5)).epsilon(1e-13));
  // Carrier phase advances linearly in x.
  CHECK(std::arg(off / center) ==
        doctest::Approx(2.0 * kPi / 16.0 * 2.0).epsilon(1e-12));

  InitConfig scaled = gauss;
  scaled.l2_norm = 0.1;
  CHECK(l2_norm(build_initial_state(scaled, g)) ==
        doctest::Approx(0.1).epsilon(1e-13));

  InitConfig pw;
  pw.kind = InitKind::plane_wave;
  pw.amplitude = 0.05;
  pw.mode_x = 3;
  pw.mode_y = -2;
  const FieldState w = build_initial_state(pw, g);
  for (std::size_t i : {std::size_t{0}, std::size_t{100}}) {
    CHECK(std::abs(w.values[i]) == doctest::Approx(0.05).epsilon(1e-13));
  }
  const FieldState what = to_spectral(w);
  // All mass on the single lattice mode (3, -2).
  CHECK(std::abs(what.values[g->index(3, 30)]) ==
        doctest::Approx(0.05 * 32.0).epsilon(1e-12));

  const fs::path dir = scratch_dir();
  const std::string snap = (dir / "init.dat").string();
  write_snapshot(w, snap);
  InitConfig from_file;
  from_file.kind = InitKind::file;
  from_file.path = snap;
  const FieldState loaded = build_initial_state(from_file, g);
  CHECK(std::memcmp(loaded.values.data(), w.values.data(),
                    w.values.size() * sizeof(cplx)) == 0);

  const GridPtr other = make_grid(16, 16, 16.0, 16.0);
  CHECK_THROWS_AS(build_initial_state(from_file, other),
                  std::invalid_argument);

  InitConfig bad = gauss;
  bad.sigma_x = 0.0;
  CHECK_THROWS_AS(build_initial_state(bad, g), std::invalid_argument);
  InitConfig zero;
  zero.kind = InitKind::gaussian;
  zero.amplitude = 0.0;
  zero.l2_norm = 1.0;
  CHECK_THROWS_AS(build_initial_state(zero, g), std::invalid_argument);
}

TEST_CASE("snapshot files: bit-exact round trip and format guards") {
  const fs::path dir = scratch_dir();
  const GridPtr g = make_grid(16, 8, 4.0, 2.0);
  FieldState f = to_physical(random_annulus_field(g, 5, 0, 0.0, 4.0));
  f.time = 0.375;

  const std::string path = (dir / "field.dat").string();
  write_snapshot(f, path);
  const FieldState r = read_snapshot(path);

  CHECK(r.grid->nx == 16);
  CHECK(r.grid->ny == 8);
  CHECK(r.grid->Lx == 4.0);
  CHECK(r.grid->Ly == 2.0);
  CHECK(r.time == 0.375);
  CHECK(r.rep == Rep::physical);
  CHECK(std::memcmp(r.values.data(), f.values.data(),
                    f.values.size() * sizeof(cplx)) == 0);

  // Writing twice produces byte-identical files.
  const std::string path2 = (dir / "field2.dat").string();
  write_snapshot(f, path2);
  CHECK(read_file(path) == read_file(path2));

  // 1D fields round trip through the ny == 1 branch.
  const GridPtr g1 = make_grid_1d(32, 10.0);
  FieldState h = FieldState::zeros(g1, Rep::physical);
  for (int i = 0; i < 32; ++i) h.values[i] = cplx(i * 0.5, -i);
  const std::string path1d = (dir / "field1d.dat").string();
  write_snapshot(h, path1d);
  const FieldState r1 = read_snapshot(path1d);
  CHECK(r1.grid->one_dim);
  CHECK(r1.grid->nx == 32);
  CHECK(std::memcmp(r1.values.data(), h.values.data(),
                    h.values.size() * sizeof(cplx)) == 0);

  // Wrong magic and wrong version are rejected.
  const std::string junk = (dir / "junk.dat").string();
  {
    std::ofstream out(junk, std::ios::binary);
    out << "NOTASNAPxxxxxxxxxxxxxxxxxxxxxxxxxxxx";
  }
  CHECK_THROWS_AS(read_snapshot(junk), std::runtime_error);

  const std::string badver = (dir / "badver.dat").string();
  {
    std::ofstream out(badver, std::ios::binary);
    out.write("DYSNAP01", 8);
    const std::uint32_t v = 99;
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
  }
  CHECK_THROWS_AS(read_snapshot(badver), std::runtime_error);

  CHECK_THROWS_AS(read_snapshot((dir / "missing.dat").string()),
                  std::runtime_error);
}

TEST_CASE("numeric text: shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(std::stod(format_double(kPi)) == kPi);
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);

  CHECK(format_complex(cplx(0.5, -0.25)) == "0.5-0.25i");
  CHECK(format_complex(cplx(-1.0, 2.0)) == "-1+2i");
  CHECK(format_complex(cplx(0.0, 0.0)) == "0+0i");
}

TEST_CASE("csv writer: exact bytes, deterministic reruns") {
  const fs::path dir = scratch_dir();
  const std::string path = (dir / "table.csv").string();
  {
    CsvWriter csv(path, {"t", "mass", "note"});
    csv.row({0.5, 1.0, -2.25});
    csv.text_row({"x", "0.1", "yes"});
    csv.close();
  }
  CHECK(read_file(path) == "t,mass,note\n0.5,1,-2.25\nx,0.1,yes\n");

  const std::string path2 = (dir / "table2.csv").string();
  {
    CsvWriter csv(path2, {"t", "mass", "note"});
    csv.row({0.5, 1.0, -2.25});
    csv.text_row({"x", "0.1", "yes"});
    csv.close();
  }
  CHECK(read_file(path) == read_file(path2));
}

TEST_CASE("manifest and DONE marker layout") {
  const fs::path dir = scratch_dir();
  write_manifest(dir.string(), "[grid]\nnx = 4", 7);
  CHECK(read_file(dir / "manifest.txt") ==
        "version = 1\nseed = 7\n# --- config ---\n[grid]\nnx = 4\n");

  write_done(dir.string());
  CHECK(read_file(dir / "DONE") == "DONE\n");
}
