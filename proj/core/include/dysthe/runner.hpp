#pragma once

// Subcommand orchestration shared by the CLI binary and the test harness.
// Each subcommand reads a RunConfig, performs its experiment, writes its
// artifacts (CSV + manifest + DONE under output.dir), and returns 0 on
// success / nonzero when a configured tolerance is violated.

#include <string>

#include "dysthe/config.hpp"

namespace dysthe {

// subcommand in {simulate, verify-cov, verify-scaling, estimate-strichartz,
// estimate-bilinear, scattering, airy1d, coeffs}.
int run_subcommand(const std::string& subcommand, const RunConfig& config);

// Full argv entry point (subcommand dispatch, --config, --out/--seed
// overrides); used by the CLI main.
int run_cli(int argc, char** argv);

}  // namespace dysthe
