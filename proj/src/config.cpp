// Copyright 2026 The cpforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cpforge/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "cpforge/error.hpp"

namespace cpforge {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text, const std::string& key) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    fail(ErrorCode::Parse, "'" + key + "': expected a number, got '" + t + "'");
  return v;
}

int parse_int(std::string_view text, const std::string& key) {
  const double v = parse_double(text, key);
  if (v != std::floor(v) || std::abs(v) > 2e9)
    fail(ErrorCode::Parse, "'" + key + "': expected an integer, got '" + trim(text) + "'");
  return static_cast<int>(v);
}

Orientation parse_orientation(std::string_view text) {
  const std::string t = trim(text);
  if (t == "z") return Orientation::AxisAlongZ;
  if (t == "x") return Orientation::AxisAlongX;
  fail(ErrorCode::Parse, "orientation must be 'z' or 'x', got '" + t + "'");
}

Substrate parse_substrate(std::string_view text) {
  const std::string t = trim(text);
  if (t == "none" || t == "suspended") return std::monostate{};
  if (t == "gold") return DrudeMetal::gold();
  return ConstantPermittivity{parse_double(t, "substrate")};
}

InterfaceKind parse_interface_kind(std::string_view text) {
  const std::string t = trim(text);
  if (t == "ideal") return InterfaceKind::Ideal;
  if (t == "drude" || t == "gold") return InterfaceKind::Drude;
  if (t == "graphene") return InterfaceKind::Graphene;
  if (t == "graphene-nonlocal") return InterfaceKind::GrapheneNonlocal;
  fail(ErrorCode::Parse, "unknown interface model '" + t + "'");
}

// Reads a flat section, rejecting keys outside `allowed`.
std::map<std::string, std::string> section(const pt::ptree& tree, const std::string& name,
                                           const std::set<std::string>& allowed) {
  std::map<std::string, std::string> out;
  const auto node = tree.get_child_optional(name);
  if (!node) return out;
  for (const auto& [key, value] : *node) {
    if (!allowed.count(key)) fail(ErrorCode::Parse, "unknown key '" + key + "' in [" + name + "]");
    out[key] = value.data();
  }
  return out;
}

void apply_metal(const std::map<std::string, std::string>& kv, const std::string& prefix,
                 DrudeMetal& metal) {
  double wp = metal.plasma_frequency();
  double gamma = metal.damping();
  if (auto it = kv.find("plasma_frequency"); it != kv.end())
    wp = parse_double(it->second, prefix + ".plasma_frequency");
  if (auto it = kv.find("damping"); it != kv.end())
    gamma = parse_double(it->second, prefix + ".damping");
  metal = DrudeMetal(wp, gamma);
}

// key=value,key=value after an optional "head:" prefix.
std::pair<std::string, std::map<std::string, std::string>> split_spec(std::string_view text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  std::pair<std::string, std::map<std::string, std::string>> out;
  out.first = trim(t.substr(0, colon));
  if (colon == std::string::npos) return out;
  std::stringstream rest(t.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::Parse, "expected key=value in '" + item + "'");
    out.second[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return out;
}

void reject_unknown(const std::map<std::string, std::string>& kv,
                    const std::set<std::string>& allowed, std::string_view what) {
  for (const auto& [k, v] : kv)
    if (!allowed.count(k))
      fail(ErrorCode::Parse, "unknown key '" + k + "' in " + std::string(what) + " spec");
}

}  // namespace

std::string_view to_string(SweepVariable variable) noexcept {
  switch (variable) {
    case SweepVariable::Distance: return "distance";
    case SweepVariable::AspectRatio: return "aspect_ratio";
    case SweepVariable::FermiLevel: return "fermi_level";
  }
  return "distance";
}

Reference parse_reference(std::string_view text) {
  const std::string t = trim(text);
  if (t == "ideal") return Reference::IdealMetal;
  if (t == "gold") return Reference::GoldHalfSpace;
  if (t == "none") return Reference::None;
  fail(ErrorCode::Parse, "reference must be ideal, gold or none, got '" + t + "'");
}

RunSpec parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorCode::Parse, "config line " + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [name, node] : tree) {
    static const std::set<std::string> known{"run",      "sweep",     "scenario",    "particle",
                                             "interface", "numerics", "conductivity"};
    if (!known.count(name) || !node.data().empty())
      fail(ErrorCode::Parse, "unknown section or top-level key '" + name + "'");
  }

  const auto run = section(tree, "run", {"kind", "name"});
  std::string kind = "sweep";
  if (auto it = run.find("kind"); it != run.end()) kind = trim(it->second);
  const std::string name = run.count("name") ? trim(run.at("name")) : std::string();

  RunSpec spec;
  if (kind == "conductivity") {
    ConductivitySpec c;
    if (!name.empty()) c.name = name;
    const auto kv =
        section(tree, "conductivity", {"fermi_level", "relaxation_time", "temperature", "n_max"});
    if (kv.count("fermi_level")) c.fermi_level_ev = parse_double(kv.at("fermi_level"), "fermi_level");
    if (kv.count("relaxation_time"))
      c.relaxation_time = parse_double(kv.at("relaxation_time"), "relaxation_time");
    if (kv.count("temperature")) c.temperature = parse_double(kv.at("temperature"), "temperature");
    if (kv.count("n_max")) c.n_max = parse_int(kv.at("n_max"), "n_max");
    require(c.n_max >= 1, "n_max must be >= 1");
    // Validates the sheet parameters.
    GrapheneSheet::from_electron_volts(c.fermi_level_ev, c.relaxation_time, c.temperature);
    spec.conductivity = c;
    return spec;
  }
  if (kind != "sweep") fail(ErrorCode::Parse, "run.kind must be sweep or conductivity");

  SweepSpec s;
  if (!name.empty()) s.name = name;

  const auto sw = section(tree, "sweep", {"variable", "min", "max", "count", "spacing"});
  if (sw.count("variable")) {
    const std::string v = trim(sw.at("variable"));
    if (v == "distance") s.variable = SweepVariable::Distance;
    else if (v == "aspect_ratio") s.variable = SweepVariable::AspectRatio;
    else if (v == "fermi_level") s.variable = SweepVariable::FermiLevel;
    else fail(ErrorCode::Parse, "unknown sweep variable '" + v + "'");
  }
  if (sw.count("min")) s.min = parse_double(sw.at("min"), "sweep.min");
  if (sw.count("max")) s.max = parse_double(sw.at("max"), "sweep.max");
  if (sw.count("count")) s.count = parse_int(sw.at("count"), "sweep.count");
  if (sw.count("spacing")) {
    const std::string v = trim(sw.at("spacing"));
    if (v == "linear") s.spacing = Spacing::Linear;
    else if (v == "log") s.spacing = Spacing::Log;
    else fail(ErrorCode::Parse, "sweep.spacing must be linear or log");
  }

  Scenario& sc = s.scenario;
  const auto scn = section(tree, "scenario", {"temperature", "distance", "reference"});
  if (scn.count("temperature")) sc.temperature = parse_double(scn.at("temperature"), "temperature");
  if (scn.count("distance")) sc.distance = parse_double(scn.at("distance"), "distance");
  if (scn.count("reference")) sc.reference = parse_reference(scn.at("reference"));

  const auto pa = section(tree, "particle", {"shape", "radius", "aspect_ratio", "semi_axis_a",
                                             "semi_axis_b", "orientation", "plasma_frequency",
                                             "damping"});
  ParticleSpec& p = sc.particle;
  if (pa.count("shape")) {
    const std::string v = trim(pa.at("shape"));
    if (v == "sphere") p.spheroid = false;
    else if (v == "spheroid") p.spheroid = true;
    else fail(ErrorCode::Parse, "particle.shape must be sphere or spheroid");
  }
  if (pa.count("radius")) p.radius = parse_double(pa.at("radius"), "particle.radius");
  if (pa.count("aspect_ratio"))
    p.aspect_ratio = parse_double(pa.at("aspect_ratio"), "particle.aspect_ratio");
  if (pa.count("semi_axis_a")) p.semi_axis_a = parse_double(pa.at("semi_axis_a"), "semi_axis_a");
  if (pa.count("semi_axis_b")) p.semi_axis_b = parse_double(pa.at("semi_axis_b"), "semi_axis_b");
  if (pa.count("orientation")) p.orientation = parse_orientation(pa.at("orientation"));
  apply_metal(pa, "particle", p.material);

  const auto in_kv = section(tree, "interface", {"model", "plasma_frequency", "damping",
                                                 "fermi_level", "relaxation_time", "temperature",
                                                 "substrate", "fermi_velocity"});
  InterfaceSpec& it = sc.interface;
  if (in_kv.count("model")) it.kind = parse_interface_kind(in_kv.at("model"));
  apply_metal(in_kv, "interface", it.metal);
  if (in_kv.count("fermi_level"))
    it.fermi_level_ev = parse_double(in_kv.at("fermi_level"), "interface.fermi_level");
  if (in_kv.count("relaxation_time"))
    it.relaxation_time = parse_double(in_kv.at("relaxation_time"), "interface.relaxation_time");
  if (in_kv.count("temperature"))
    it.temperature = parse_double(in_kv.at("temperature"), "interface.temperature");
  if (in_kv.count("substrate")) it.substrate = parse_substrate(in_kv.at("substrate"));
  if (in_kv.count("fermi_velocity"))
    it.fermi_velocity = parse_double(in_kv.at("fermi_velocity"), "interface.fermi_velocity");

  const auto nu = section(tree, "numerics", {"tolerance", "max_terms", "threads"});
  if (nu.count("tolerance")) s.numerics.tolerance = parse_double(nu.at("tolerance"), "tolerance");
  if (nu.count("max_terms")) s.numerics.max_terms = parse_int(nu.at("max_terms"), "max_terms");
  if (nu.count("threads")) s.numerics.threads = parse_int(nu.at("threads"), "threads");

  validate(s);
  spec.sweep = s;
  return spec;
}

RunSpec parse_config_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

RunSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open config '" + path + "'");
  try {
    return parse_config(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void validate(const SweepSpec& s) {
  require(std::isfinite(s.min) && std::isfinite(s.max) && s.min < s.max,
          "sweep range must satisfy min < max");
  require(s.count >= 2, "sweep count must be >= 2");
  require(s.spacing == Spacing::Linear || s.min > 0.0, "log spacing needs min > 0");
  require(s.numerics.tolerance > 0.0 && s.numerics.tolerance < 1.0,
          "tolerance must be in (0, 1)");
  require(s.numerics.max_terms >= 1, "max_terms must be >= 1");
  require(s.numerics.threads >= 0, "threads must be >= 0");
  const Scenario& sc = s.scenario;
  require(std::isfinite(sc.temperature) && sc.temperature > 0.0, "temperature must be > 0");
  if (s.variable != SweepVariable::Distance)
    require(std::isfinite(sc.distance) && sc.distance > 0.0, "distance must be > 0");
  if (s.variable == SweepVariable::Distance) require(s.min > 0.0, "distances must be > 0");
  if (s.variable == SweepVariable::AspectRatio) require(s.min > 0.0, "aspect ratios must be > 0");
  if (s.variable == SweepVariable::FermiLevel) {
    require(s.min >= 0.0, "Fermi levels must be >= 0");
    require(sc.interface.kind == InterfaceKind::Graphene,
            "a Fermi-level sweep needs the local graphene model");
  }
  // Builds the fixed parts once so that errors surface before any row runs.
  const Scenario probe = scenario_at(s, s.min);
  build_particle(probe.particle);
  build_interface(probe.interface, probe.temperature);
}

std::vector<double> sweep_values(const SweepSpec& s) {
  std::vector<double> out(s.count);
  for (int i = 0; i < s.count; ++i) {
    const double f = static_cast<double>(i) / (s.count - 1);
    out[i] = s.spacing == Spacing::Log ? s.min * std::pow(s.max / s.min, f)
                                       : s.min + (s.max - s.min) * f;
  }
  // Endpoints exactly as configured.
  out.front() = s.min;
  out.back() = s.max;
  return out;
}

Scenario scenario_at(const SweepSpec& s, double value) {
  Scenario sc = s.scenario;
  switch (s.variable) {
    case SweepVariable::Distance:
      sc.distance = value;
      break;
    case SweepVariable::AspectRatio:
      sc.particle.spheroid = true;
      sc.particle.aspect_ratio = value;
      sc.particle.semi_axis_a.reset();
      sc.particle.semi_axis_b.reset();
      break;
    case SweepVariable::FermiLevel:
      sc.interface.fermi_level_ev = value;
      break;
  }
  return sc;
}

Spheroid build_particle(const ParticleSpec& p) {
  if (p.semi_axis_a && p.semi_axis_b)
    return Spheroid(*p.semi_axis_a, *p.semi_axis_b, p.orientation, p.material);
  require(!p.semi_axis_a && !p.semi_axis_b, "give both semi axes or neither");
  if (!p.spheroid) return Spheroid(p.radius, p.radius, p.orientation, p.material);
  return Spheroid::with_aspect_ratio(p.aspect_ratio, p.radius, p.orientation, p.material);
}

InterfaceModel build_interface(const InterfaceSpec& spec, double temperature) {
  const double t = spec.temperature.value_or(temperature);
  switch (spec.kind) {
    case InterfaceKind::Ideal:
      return IdealMetal{};
    case InterfaceKind::Drude:
      return DrudeHalfSpace{spec.metal};
    case InterfaceKind::Graphene:
      return LocalGraphene{GrapheneSheet::from_electron_volts(spec.fermi_level_ev,
                                                              spec.relaxation_time, t,
                                                              spec.substrate)};
    case InterfaceKind::GrapheneNonlocal:
      require(std::isfinite(t) && t > 0.0, "temperature must be > 0");
      require(std::isfinite(spec.fermi_velocity) && spec.fermi_velocity > 0.0,
              "Fermi velocity must be > 0");
      return NonlocalGraphene{t, spec.fermi_velocity};
  }
  fail(ErrorCode::InvalidArgument, "unknown interface model");
}

std::optional<InterfaceModel> reference_interface(Reference reference) {
  switch (reference) {
    case Reference::IdealMetal: return InterfaceModel{IdealMetal{}};
    case Reference::GoldHalfSpace: return InterfaceModel{DrudeHalfSpace{DrudeMetal::gold()}};
    case Reference::None: return std::nullopt;
  }
  return std::nullopt;
}

InterfaceSpec parse_interface_spec(std::string_view text) {
  const auto [head, kv] = split_spec(text);
  InterfaceSpec s;
  if (head == "gold") {
    reject_unknown(kv, {}, "interface");
    s.kind = InterfaceKind::Drude;
    return s;
  }
  s.kind = parse_interface_kind(head);
  switch (s.kind) {
    case InterfaceKind::Ideal:
      reject_unknown(kv, {}, "interface");
      break;
    case InterfaceKind::Drude: {
      reject_unknown(kv, {"wp", "gamma"}, "interface");
      const double wp = kv.count("wp") ? parse_double(kv.at("wp"), "wp") : s.metal.plasma_frequency();
      const double g = kv.count("gamma") ? parse_double(kv.at("gamma"), "gamma") : s.metal.damping();
      s.metal = DrudeMetal(wp, g);
      break;
    }
    case InterfaceKind::Graphene:
      reject_unknown(kv, {"ef", "tau", "T", "substrate"}, "interface");
      if (kv.count("ef")) s.fermi_level_ev = parse_double(kv.at("ef"), "ef");
      if (kv.count("tau")) s.relaxation_time = parse_double(kv.at("tau"), "tau");
      if (kv.count("T")) s.temperature = parse_double(kv.at("T"), "T");
      if (kv.count("substrate")) s.substrate = parse_substrate(kv.at("substrate"));
      break;
    case InterfaceKind::GrapheneNonlocal:
      reject_unknown(kv, {"T", "vf"}, "interface");
      if (kv.count("T")) s.temperature = parse_double(kv.at("T"), "T");
      if (kv.count("vf")) s.fermi_velocity = parse_double(kv.at("vf"), "vf");
      break;
  }
  return s;
}

ParticleSpec parse_particle_spec(std::string_view text) {
  const auto [head, kv] = split_spec(text);
  ParticleSpec p;
  if (head == "sphere") {
    reject_unknown(kv, {"r", "wp", "gamma"}, "particle");
  } else if (head == "spheroid") {
    reject_unknown(kv, {"r", "rho", "a", "b", "axis", "wp", "gamma"}, "particle");
    p.spheroid = true;
    if (kv.count("rho")) p.aspect_ratio = parse_double(kv.at("rho"), "rho");
    if (kv.count("a")) p.semi_axis_a = parse_double(kv.at("a"), "a");
    if (kv.count("b")) p.semi_axis_b = parse_double(kv.at("b"), "b");
    if (kv.count("axis")) p.orientation = parse_orientation(kv.at("axis"));
  } else {
    fail(ErrorCode::Parse, "particle spec must start with sphere or spheroid");
  }
  if (kv.count("r")) p.radius = parse_double(kv.at("r"), "r");
  const double wp = kv.count("wp") ? parse_double(kv.at("wp"), "wp") : p.material.plasma_frequency();
  const double g = kv.count("gamma") ? parse_double(kv.at("gamma"), "gamma") : p.material.damping();
  p.material = DrudeMetal(wp, g);
  build_particle(p);
  return p;
}

}  // namespace cpforge
