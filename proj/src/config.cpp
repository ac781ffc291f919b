#include "cmflow/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace cmflow {

namespace {

std::string trim(const std::string& s) {
  auto b = s.begin();
  while (b != s.end() && std::isspace(static_cast<unsigned char>(*b))) ++b;
  auto e = s.end();
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return {b, e};
}

double parse_double(const std::string& v, const std::string& key, int line) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("invalid number for '" + key + "': " + v, line);
  }
}

int parse_int(const std::string& v, const std::string& key, int line) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("invalid integer for '" + key + "': " + v, line);
  }
}

bool parse_bool(const std::string& v, const std::string& key, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("invalid boolean for '" + key + "': " + v, line);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void apply_key(RunConfig& c, const std::string& section,
               const std::string& key, const std::string& value, int line) {
  if (section == "scenario") {
    if (key == "name") { c.name = value; return; }
    if (key == "n") { c.n = parse_int(value, key, line); return; }
    if (key == "k") { c.k = parse_int(value, key, line); return; }
    if (key == "p") { c.p = parse_double(value, key, line); return; }
    if (key == "phi") { c.phi_kind = value; return; }
    if (key == "phi_eps") { c.phi_eps = parse_double(value, key, line); return; }
    if (key == "phi_m") { c.phi_m = parse_double(value, key, line); return; }
    if (key == "phi_delta") { c.phi_delta = parse_double(value, key, line); return; }
    if (key == "initial") { c.initial_kind = value; return; }
    if (key == "initial_radius") { c.initial_radius = parse_double(value, key, line); return; }
    if (key == "initial_a") { c.initial_a = parse_double(value, key, line); return; }
    if (key == "initial_c") { c.initial_c = parse_double(value, key, line); return; }
    if (key == "expected") { c.expected = value; return; }
  } else if (section == "grid") {
    if (key == "num_points") { c.num_points = parse_int(value, key, line); return; }
  } else if (section == "engine") {
    if (key == "cfl") { c.cfl = parse_double(value, key, line); return; }
    if (key == "t_max") { c.t_max = parse_double(value, key, line); return; }
    if (key == "residual_tol") { c.residual_tol = parse_double(value, key, line); return; }
    if (key == "normalization") { c.normalization = value; return; }
    if (key == "projection") { c.projection = parse_bool(value, key, line); return; }
    if (key == "sample_stride") { c.sample_stride = parse_int(value, key, line); return; }
    if (key == "breakdown_zeta_tol") { c.breakdown_zeta_tol = parse_double(value, key, line); return; }
  } else if (section == "output") {
    if (key == "directory") { c.directory = value; return; }
    if (key == "formats") { c.formats = split_list(value); return; }
  }
  throw ConfigError("unknown key '" + key + "' in section [" + section + "]",
                    line);
}

void check_semantics(const RunConfig& c) {
  if (!c.name.empty() && !is_known_scenario(c.name))
    throw ConfigError("unknown scenario name: " + c.name);
  if (c.n < 2) throw ConfigError("n must be >= 2");
  if (c.k < 1 || c.k > c.n) throw ConfigError("k must satisfy 1 <= k <= n");
  if (c.num_points < 16) throw ConfigError("num_points must be >= 16");
  if (!(c.cfl > 0.0) || c.cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]");
  if (!(c.t_max > 0.0)) throw ConfigError("t_max must be positive");
  if (!(c.residual_tol > 0.0))
    throw ConfigError("residual_tol must be positive");
  if (c.sample_stride < 1) throw ConfigError("sample_stride must be >= 1");
  if (c.breakdown_zeta_tol > 0.0)
    throw ConfigError("breakdown_zeta_tol must be <= 0");

  if (c.phi_kind != "constant" && c.phi_kind != "sin2_power" &&
      c.phi_kind != "tilted" && c.phi_kind != "counterexample")
    throw ConfigError("unknown phi kind: " + c.phi_kind);
  if (c.phi_kind == "tilted" && c.k != c.n)
    throw ConfigError("tilted phi is supported only for k = n");
  if (c.phi_kind == "sin2_power" && !(c.phi_eps > 0.0 && c.phi_eps < 1.0))
    throw ConfigError("phi_eps must lie in (0, 1)");
  if (c.phi_kind == "tilted" && !(std::abs(c.phi_delta) < 1.0))
    throw ConfigError("phi_delta must lie in (-1, 1)");
  if ((c.phi_kind == "sin2_power" || c.phi_kind == "counterexample") &&
      !(c.phi_m > 0.0))
    throw ConfigError("phi_m must be positive");

  if (c.initial_kind != "sphere" && c.initial_kind != "spheroid" &&
      c.initial_kind != "counterexample")
    throw ConfigError("unknown initial kind: " + c.initial_kind);
  if (c.initial_kind == "counterexample" && c.k == c.n)
    throw ConfigError(
        "the counterexample construction requires k < n (sigma_n vanishes on "
        "the flat cap)");
  if (c.initial_kind == "sphere" && !(c.initial_radius > 0.0))
    throw ConfigError("initial_radius must be positive");
  if (c.initial_kind == "spheroid" &&
      !(c.initial_a > 0.0 && c.initial_c > 0.0))
    throw ConfigError("spheroid semi-axes must be positive");

  if (c.normalization != "unnormalized" &&
      c.normalization != "normalized_pde" &&
      c.normalization != "rescale_each_step")
    throw ConfigError("unknown normalization mode: " + c.normalization);
  if (c.expected != "converge" && c.expected != "breakdown" &&
      c.expected != "none")
    throw ConfigError("expected must be converge|breakdown|none");

  if (c.formats.empty()) throw ConfigError("formats must not be empty");
  for (const auto& f : c.formats)
    if (f != "csv" && f != "json")
      throw ConfigError("unknown output format: " + f);
}

} // namespace

RunConfig preset_config(const std::string& name) {
  RunConfig c;
  c.name = name;
  if (name == "round_sphere") {
    c.n = 2; c.k = 1; c.p = 3.0;
    c.phi_kind = "constant";
    c.initial_kind = "sphere";
    c.expected = "converge";
  } else if (name == "theorem2") {
    c.n = 2; c.k = 1; c.p = 3.0;
    c.phi_kind = "constant";
    c.initial_kind = "spheroid";
    c.initial_a = 1.0; c.initial_c = 1.3;
    c.expected = "converge";
  } else if (name == "theorem1") {
    c.n = 3; c.k = 2; c.p = 4.0;
    c.phi_kind = "sin2_power";
    c.phi_eps = 0.2; c.phi_m = 5.0;  // p + k - 1
    c.initial_kind = "spheroid";
    c.initial_a = 1.0; c.initial_c = 1.3;
    c.expected = "converge";
    c.residual_tol = 1e-5;
  } else if (name == "theorem1a") {
    c.n = 2; c.k = 2; c.p = 4.0;
    c.phi_kind = "tilted";
    c.phi_delta = 0.3;
    c.initial_kind = "spheroid";
    c.initial_a = 1.0; c.initial_c = 1.3;
    c.expected = "converge";
    c.residual_tol = 1e-5;
  } else if (name == "counterexample") {
    c.n = 2; c.k = 1; c.p = 3.0;
    c.phi_kind = "counterexample";
    c.phi_m = 3.0;  // p + k - 1
    c.initial_kind = "counterexample";
    c.expected = "breakdown";
    c.normalization = "unnormalized";
    c.t_max = 5.0;
    c.sample_stride = 10;
  } else {
    throw ConfigError("unknown scenario name: " + name);
  }
  return c;
}

RunConfig parse_config(const std::string& text) {
  // First pass: collect (section, key, value, line), syntax-checked.
  struct Entry { std::string section, key, value; int line; };
  std::vector<Entry> entries;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("malformed section header: " + line, lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "grid" && section != "engine" &&
          section != "output")
        throw ConfigError("unknown section [" + section + "]", lineno);
      continue;
    }
    const auto pos = line.find('=');
    if (pos == std::string::npos)
      throw ConfigError("expected key = value: " + line, lineno);
    if (section.empty())
      throw ConfigError("key outside of any section: " + line, lineno);
    entries.push_back(
        {section, trim(line.substr(0, pos)), trim(line.substr(pos + 1)),
         lineno});
  }

  // Preset first (if a known name appears), then explicit keys on top.
  RunConfig cfg;
  for (const auto& e : entries)
    if (e.section == "scenario" && e.key == "name") {
      cfg = preset_config(e.value);
      break;
    }
  for (const auto& e : entries) apply_key(cfg, e.section, e.key, e.value, e.line);
  check_semantics(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[scenario]\n";
  if (!c.name.empty()) o << "name = " << c.name << "\n";
  o << "n = " << c.n << "\n"
    << "k = " << c.k << "\n"
    << "p = " << fmt_double(c.p) << "\n"
    << "phi = " << c.phi_kind << "\n"
    << "phi_eps = " << fmt_double(c.phi_eps) << "\n"
    << "phi_m = " << fmt_double(c.phi_m) << "\n"
    << "phi_delta = " << fmt_double(c.phi_delta) << "\n"
    << "initial = " << c.initial_kind << "\n"
    << "initial_radius = " << fmt_double(c.initial_radius) << "\n"
    << "initial_a = " << fmt_double(c.initial_a) << "\n"
    << "initial_c = " << fmt_double(c.initial_c) << "\n"
    << "expected = " << c.expected << "\n\n";
  o << "[grid]\n"
    << "num_points = " << c.num_points << "\n\n";
  o << "[engine]\n"
    << "cfl = " << fmt_double(c.cfl) << "\n"
    << "t_max = " << fmt_double(c.t_max) << "\n"
    << "residual_tol = " << fmt_double(c.residual_tol) << "\n"
    << "normalization = " << c.normalization << "\n"
    << "projection = " << (c.projection ? "true" : "false") << "\n"
    << "sample_stride = " << c.sample_stride << "\n"
    << "breakdown_zeta_tol = " << fmt_double(c.breakdown_zeta_tol) << "\n\n";
  o << "[output]\n"
    << "directory = " << c.directory << "\n"
    << "formats = ";
  for (size_t i = 0; i < c.formats.size(); ++i)
    o << (i ? "," : "") << c.formats[i];
  o << "\n";
  return o.str();
}

ScenarioSpec make_scenario(const std::string& name, int num_points) {
  RunConfig c = preset_config(name);
  c.num_points = num_points;
  auto spec = build_scenario(c);
  spec.name = name;
  return spec;
}

ScenarioSpec build_scenario(const RunConfig& c) {
  check_semantics(c);
  auto grid = build_grid(c.n, c.num_points);

  PhiSpec pspec;
  if (c.phi_kind == "constant") pspec.kind = PhiSpec::Kind::constant;
  else if (c.phi_kind == "sin2_power") {
    pspec.kind = PhiSpec::Kind::sin2_power;
    pspec.eps = c.phi_eps;
    pspec.m = c.phi_m;
  } else if (c.phi_kind == "tilted") {
    pspec.kind = PhiSpec::Kind::tilted;
    pspec.delta = c.phi_delta;
  } else {
    pspec.kind = PhiSpec::Kind::counterexample;
    pspec.m = c.phi_m;
  }

  FlowParams prm(phi_family(grid, pspec));
  prm.k = c.k;
  prm.p = c.p;
  prm.cfl = c.cfl;
  prm.t_max = c.t_max;
  prm.residual_tol = c.residual_tol;
  prm.normalization = c.normalization == "unnormalized"
                          ? Normalization::unnormalized
                      : c.normalization == "normalized_pde"
                          ? Normalization::normalized_pde
                          : Normalization::rescale_each_step;
  prm.renorm_projection = c.projection;
  prm.sample_stride = c.sample_stride;
  prm.breakdown_zeta_tol = c.breakdown_zeta_tol;

  RadialProfile initial = c.initial_kind == "sphere"
                              ? RadialProfile::constant(grid, c.initial_radius)
                          : c.initial_kind == "spheroid"
                              ? spheroid_profile(grid, c.initial_a, c.initial_c)
                              : counterexample_h0(grid);

  ExpectedOutcome exp = c.expected == "converge"   ? ExpectedOutcome::converge
                        : c.expected == "breakdown" ? ExpectedOutcome::breakdown
                                                    : ExpectedOutcome::none;

  const std::string label = c.name.empty() ? "inline" : c.name;
  return {label, std::move(prm), std::move(initial), exp, ""};
}

} // namespace cmflow
