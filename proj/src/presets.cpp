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


#include "cpforge/presets.hpp"

#include "cpforge/error.hpp"

namespace cpforge {

namespace {

RunSpec sweep(SweepSpec s) {
  RunSpec r;
  r.sweep = std::move(s);
  return r;
}

SweepSpec distance_sweep(std::string name, double min, double max, int count) {
  SweepSpec s;
  s.name = std::move(name);
  s.variable = SweepVariable::Distance;
  s.min = min;
  s.max = max;
  s.count = count;
  s.spacing = Spacing::Log;
  return s;
}

InterfaceSpec graphene(double fermi_level_ev) {
  InterfaceSpec i;
  i.kind = InterfaceKind::Graphene;
  i.fermi_level_ev = fermi_level_ev;
  return i;
}

std::string label(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

std::vector<RunSpec> graphene_distance_curves(const std::string& prefix, Reference reference) {
  std::vector<RunSpec> runs;
  for (double ef : {0.0, 0.5, 1.0}) {
    auto s = distance_sweep(prefix + "_ef" + label(ef), 100e-9, 10e-6, 40);
    s.scenario.interface = graphene(ef);
    s.scenario.reference = reference;
    runs.push_back(sweep(s));
  }
  return runs;
}

std::vector<RunSpec> spheroid_distance_curves(const std::string& prefix, double fermi_level_ev,
                                              bool with_nonlocal) {
  std::vector<RunSpec> runs;
  for (auto orientation : {Orientation::AxisAlongX, Orientation::AxisAlongZ}) {
    const std::string axis = orientation == Orientation::AxisAlongX ? "x" : "z";
    for (double rho : {0.1, 1.0, 10.0}) {
      for (bool nonlocal : {false, true}) {
        if (nonlocal && !with_nonlocal) continue;
        auto s = distance_sweep(prefix + "_" + axis + "_rho" + label(rho) +
                                    (nonlocal ? "_nonlocal" : "_local"),
                                20e-9, 10e-6, 25);
        s.scenario.particle.spheroid = rho != 1.0;
        s.scenario.particle.aspect_ratio = rho;
        s.scenario.particle.orientation = orientation;
        if (nonlocal) {
          s.scenario.interface.kind = InterfaceKind::GrapheneNonlocal;
        } else {
          s.scenario.interface = graphene(fermi_level_ev);
        }
        runs.push_back(sweep(s));
      }
    }
  }
  return runs;
}

std::vector<Preset> build() {
  std::vector<Preset> out;

  {
    Preset p{"fig2", "graphene conductivity terms vs Matsubara index (E_F = 0.5 eV, T = 300 K)", {}};
    RunSpec r;
    ConductivitySpec c;
    c.name = "fig2_conductivity";
    r.conductivity = c;
    p.runs.push_back(r);
    out.push_back(std::move(p));
  }
  {
    Preset p{"fig3", "Au sphere above a Au half-space, normalized to an ideal metal", {}};
    auto s = distance_sweep("fig3_gold", 100e-9, 10e-6, 40);
    s.scenario.interface.kind = InterfaceKind::Drude;
    p.runs.push_back(sweep(s));
    out.push_back(std::move(p));
  }
  out.push_back({"fig4-top",
                 "Au sphere above suspended graphene (E_F = 0, 0.5, 1 eV), normalized to an ideal metal",
                 graphene_distance_curves("fig4-top", Reference::IdealMetal)});
  out.push_back({"fig4-bottom",
                 "Au sphere above suspended graphene (E_F = 0, 0.5, 1 eV), normalized to a Au half-space",
                 graphene_distance_curves("fig4-bottom", Reference::GoldHalfSpace)});
  out.push_back({"fig5",
                 "Au spheroids (R_b/R_a = 0.1, 1, 10; axis x and z) above pristine graphene, "
                 "local and nonlocal, normalized to an ideal metal",
                 spheroid_distance_curves("fig5", 0.0, true)});
  out.push_back({"fig6",
                 "Au spheroids (R_b/R_a = 0.1, 1, 10; axis x and z) above graphene with "
                 "E_F = 1 eV, normalized to an ideal metal",
                 spheroid_distance_curves("fig6", 1.0, false)});
  {
    Preset p{"aspect",
             "Au spheroid above suspended graphene vs R_b/R_a at d = 100 nm and 1 um "
             "(E_F = 0 and 1 eV, axis x and z)",
             {}};
    for (double d : {100e-9, 1e-6}) {
      for (double ef : {0.0, 1.0}) {
        for (auto orientation : {Orientation::AxisAlongX, Orientation::AxisAlongZ}) {
          SweepSpec s;
          s.name = std::string("aspect_d") + (d < 1e-6 ? "100nm" : "1um") + "_ef" + label(ef) +
                   (orientation == Orientation::AxisAlongX ? "_x" : "_z");
          s.variable = SweepVariable::AspectRatio;
          s.min = 0.1;
          s.max = 10.0;
          s.count = 41;
          s.spacing = Spacing::Log;
          s.scenario.distance = d;
          s.scenario.particle.spheroid = true;
          s.scenario.particle.orientation = orientation;
          s.scenario.interface = graphene(ef);
          p.runs.push_back(sweep(s));
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  fail(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

}  // namespace cpforge
