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


#pragma once

// Built-in configurations reproducing the published figures. Axis ranges
// that the figures do not state are reconstructions (see README).

#include <string>
#include <string_view>
#include <vector>

#include "cpforge/config.hpp"

namespace cpforge {

struct Preset {
  std::string name;
  std::string description;
  /// One entry per curve (or table); each carries its own file stem in `name`.
  std::vector<RunSpec> runs;
};

const std::vector<Preset>& presets();
/// Throws InvalidArgument for unknown names.
const Preset& find_preset(std::string_view name);

}  // namespace cpforge
