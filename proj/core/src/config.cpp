#include "dysthe/config.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dysthe {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Plain double, full-token match (leading '+' tolerated).
double plain_real(const std::string& token, const std::string& ctx) {
  std::string body = trim(token);
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  double value = 0.0;
  const char* b = body.data();
  const char* e = b + body.size();
  const auto [p, ec] = std::from_chars(b, e, value);
  if (body.empty() || ec != std::errc() || p != e) {
    fail(ctx + ": bad real literal '" + trim(token) + "'");
  }
  return value;
}

double real_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  if (s.empty()) fail(ctx + ": empty real literal");
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    const std::string body = trim(s.substr(0, s.size() - 2));
    if (body.empty() || body == "+") return std::numbers::pi;
    if (body == "-") return -std::numbers::pi;
    return plain_real(body, ctx) * std::numbers::pi;
  }
  return plain_real(s, ctx);
}

cplx complex_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  if (s.empty()) fail(ctx + ": empty complex literal");
  if (s.back() != 'i') return cplx(plain_real(s, ctx), 0.0);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const std::string imag = trim(body);
    if (imag.empty() || imag == "+") return cplx(0.0, 1.0);
    if (imag == "-") return cplx(0.0, -1.0);
    return cplx(0.0, plain_real(imag, ctx));
  }
  const double re = plain_real(body.substr(0, split), ctx);
  const std::string imag = body.substr(split);
  if (imag == "+") return cplx(re, 1.0);
  if (imag == "-") return cplx(re, -1.0);
  return cplx(re, plain_real(imag, ctx));
}

int int_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  int value = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  const auto [p, ec] = std::from_chars(b, e, value);
  if (s.empty() || ec != std::errc() || p != e) {
    fail(ctx + ": bad integer '" + s + "'");
  }
  return value;
}

std::uint64_t uint64_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  std::uint64_t value = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  const auto [p, ec] = std::from_chars(b, e, value);
  if (s.empty() || ec != std::errc() || p != e) {
    fail(ctx + ": bad unsigned integer '" + s + "'");
  }
  return value;
}

bool bool_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  if (s == "true") return true;
  if (s == "false") return false;
  fail(ctx + ": expected true or false, got '" + s + "'");
}

std::vector<std::string> list_split(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (const char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::vector<double> real_list(const std::string& token, const std::string& ctx) {
  std::vector<double> out;
  for (const std::string& item : list_split(token)) {
    out.push_back(real_from(item, ctx));
  }
  if (out.empty()) fail(ctx + ": empty list");
  return out;
}

InitKind init_kind_from(const std::string& token, const std::string& ctx) {
  const std::string s = trim(token);
  if (s == "gaussian") return InitKind::gaussian;
  if (s == "plane-wave") return InitKind::plane_wave;
  if (s == "file") return InitKind::file;
  fail(ctx + ": expected gaussian, plane-wave, or file; got '" + s + "'");
}

void apply_model(RunConfig& cfg, const std::string& key,
                 const std::string& value, const std::string& ctx) {
  if (key == "kind") {
    cfg.kind = model_kind_from_string(trim(value));
  } else if (key == "kappa") {
    cfg.params.kappa = real_from(value, ctx);
  } else if (key == "h") {
    cfg.params.h = real_from(value, ctx);
  } else if (key == "omega0") {
    cfg.params.omega0 = real_from(value, ctx);
  } else if (key == "k0") {
    cfg.params.k0 = real_from(value, ctx);
  } else if (key == "gc_n4_scale") {
    cfg.params.gc_n4_scale = real_from(value, ctx);
  } else if (key == "alpha") {
    const std::vector<double> items = real_list(value, ctx);
    if (items.size() != 3) fail(ctx + ": expected exactly 3 values");
    cfg.params.alpha = std::array<double, 3>{items[0], items[1], items[2]};
  } else if (key == "c") {
    const std::vector<std::string> items = list_split(value);
    if (items.size() != 4) fail(ctx + ": expected exactly 4 values");
    std::array<cplx, 4> c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = complex_from(items[k], ctx);
    cfg.params.c = c;
  } else if (key == "dealias_products") {
    cfg.params.dealias_products = bool_from(value, ctx);
  } else if (key == "exact_products") {
    cfg.params.exact_products = bool_from(value, ctx);
  } else {
    fail("unknown key '" + ctx + "'");
  }
}

void apply_grid(RunConfig& cfg, const std::string& key,
                const std::string& value, const std::string& ctx) {
  if (key == "nx") cfg.grid.nx = int_from(value, ctx);
  else if (key == "ny") cfg.grid.ny = int_from(value, ctx);
  else if (key == "Lx") cfg.grid.Lx = real_from(value, ctx);
  else if (key == "Ly") cfg.grid.Ly = real_from(value, ctx);
  else fail("unknown key '" + ctx + "'");
}

void apply_integrator(RunConfig& cfg, const std::string& key,
                      const std::string& value, const std::string& ctx) {
  if (key == "scheme") cfg.scheme = scheme_from_string(trim(value));
  else if (key == "dt") cfg.dt = real_from(value, ctx);
  else if (key == "T") cfg.T = real_from(value, ctx);
  else if (key == "blowup_linf") cfg.blowup_linf = real_from(value, ctx);
  else fail("unknown key '" + ctx + "'");
}

void apply_init(RunConfig& cfg, const std::string& key,
                const std::string& value, const std::string& ctx) {
  if (key == "kind") cfg.init.kind = init_kind_from(value, ctx);
  else if (key == "amplitude") cfg.init.amplitude = real_from(value, ctx);
  else if (key == "sigma_x") cfg.init.sigma_x = real_from(value, ctx);
  else if (key == "sigma_y") cfg.init.sigma_y = real_from(value, ctx);
  else if (key == "carrier_xi") cfg.init.carrier_xi = real_from(value, ctx);
  else if (key == "carrier_mu") cfg.init.carrier_mu = real_from(value, ctx);
  else if (key == "l2_norm") cfg.init.l2_norm = real_from(value, ctx);
  else if (key == "mode_x") cfg.init.mode_x = int_from(value, ctx);
  else if (key == "mode_y") cfg.init.mode_y = int_from(value, ctx);
  else if (key == "path") cfg.init.path = trim(value);
  else fail("unknown key '" + ctx + "'");
}

void apply_output(RunConfig& cfg, const std::string& key,
                  const std::string& value, const std::string& ctx) {
  if (key == "dir") cfg.output.dir = trim(value);
  else if (key == "snapshot_every") cfg.output.snapshot_every = int_from(value, ctx);
  else if (key == "diag_every") cfg.output.diag_every = int_from(value, ctx);
  else if (key == "snapshot_times") cfg.output.snapshot_times = real_list(value, ctx);
  else if (key == "write_snapshots") cfg.output.write_snapshots = bool_from(value, ctx);
  else fail("unknown key '" + ctx + "'");
}

void apply_sections(RunConfig& cfg, const std::string& section,
                    const std::string& key, const std::string& value) {
  const std::string ctx = section + "." + key;
  if (section == "model") return apply_model(cfg, key, value, ctx);
  if (section == "grid") return apply_grid(cfg, key, value, ctx);
  if (section == "integrator") return apply_integrator(cfg, key, value, ctx);
  if (section == "init") return apply_init(cfg, key, value, ctx);
  if (section == "output") return apply_output(cfg, key, value, ctx);
  if (section == "run") {
    if (key == "seed") cfg.seed = uint64_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "cov") {
    if (key == "compare_every") cfg.cov.compare_every = int_from(value, ctx);
    else if (key == "tolerance") cfg.cov.tolerance = real_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "scaling") {
    if (key == "lambda") cfg.scaling.lambda = real_from(value, ctx);
    else if (key == "tolerance") cfg.scaling.tolerance = real_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "strichartz") {
    if (key == "t_window") cfg.strichartz.t_window = real_from(value, ctx);
    else if (key == "nt") cfg.strichartz.nt = int_from(value, ctx);
    else if (key == "refine") cfg.strichartz.refine = int_from(value, ctx);
    else if (key == "lambda") cfg.strichartz.lambda = real_from(value, ctx);
    else if (key == "tolerance_refine") cfg.strichartz.tolerance_refine = real_from(value, ctx);
    else if (key == "tolerance_scale") cfg.strichartz.tolerance_scale = real_from(value, ctx);
    else if (key == "bands") cfg.strichartz.bands = real_list(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "bilinear") {
    if (key == "n2") cfg.bilinear.n2 = real_from(value, ctx);
    else if (key == "n1") cfg.bilinear.n1 = real_list(value, ctx);
    else if (key == "draws") cfg.bilinear.draws = int_from(value, ctx);
    else if (key == "nt") cfg.bilinear.nt = int_from(value, ctx);
    else if (key == "window_scale") cfg.bilinear.window_scale = real_from(value, ctx);
    else if (key == "slope_tol") cfg.bilinear.slope_tol = real_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "scattering") {
    if (key == "times") cfg.scattering.times = real_list(value, ctx);
    else if (key == "ratio_max") cfg.scattering.ratio_max = real_from(value, ctx);
    else if (key == "edge_max") cfg.scattering.edge_max = real_from(value, ctx);
    else if (key == "extend") cfg.scattering.extend = bool_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "airy") {
    if (key == "t") cfg.airy.t = real_from(value, ctx);
    else if (key == "refine") cfg.airy.refine = int_from(value, ctx);
    else if (key == "tolerance") cfg.airy.tolerance = real_from(value, ctx);
    else if (key == "ratio_max") cfg.airy.ratio_max = real_from(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  if (section == "coeffs") {
    if (key == "kappa") cfg.coeffs.kappa = real_list(value, ctx);
    else fail("unknown key '" + ctx + "'");
    return;
  }
  fail("unknown section '" + section + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  cfg.echo = text;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '#' || line[k] == ';') {
        line.erase(k);
        break;
      }
    }
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        fail("line " + std::to_string(lineno) + ": malformed section header");
      }
      section = trim(t.substr(1, t.size() - 2));
      static const char* kSections[] = {
          "model",     "grid",      "integrator", "init",    "output",
          "run",       "cov",       "scaling",    "strichartz",
          "bilinear",  "scattering", "airy",      "coeffs"};
      bool known = false;
      for (const char* name : kSections) known = known || section == name;
      if (!known) fail("unknown section '" + section + "'");
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      fail("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) {
      fail("key '" + key + "' appears before any [section]");
    }
    if (key.empty()) {
      fail("line " + std::to_string(lineno) + ": empty key");
    }
    apply_sections(cfg, section, key, value);
  }
  if (cfg.grid.ny == 0) {
    cfg.grid.ny = cfg.kind == ModelKind::Dysthe1D ? 1 : cfg.grid.nx;
  }
  if (cfg.grid.Ly == 0.0) cfg.grid.Ly = cfg.grid.Lx;
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

double parse_real_literal(const std::string& text) {
  return real_from(text, "real literal");
}

cplx parse_complex_literal(const std::string& text) {
  return complex_from(text, "complex literal");
}

}  // namespace dysthe
