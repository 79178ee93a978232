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

#include <cmath>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpforge/config.hpp"

namespace cpforge {

/// One evaluated sweep point. Quantities that were not computed (no
/// reference, or a failed row) are NaN and print as empty CSV fields.
struct ResultRow {
  double value = NAN;
  double force = NAN;      // [N]
  double ref_force = NAN;  // [N]
  double ratio = NAN;
  double energy = NAN;  // [J]
  int terms = 0;
  double tail_bound = NAN;  // force tail bound [N]
  std::string error;        // empty on success

  bool ok() const noexcept { return error.empty(); }
};

struct SweepResult {
  std::string name;
  SweepVariable variable = SweepVariable::Distance;
  std::vector<ResultRow> rows;
  std::vector<std::string> warnings;

  std::size_t failures() const noexcept;
};

/// Called after each finished row with (finished, total); may be empty.
using Progress = std::function<void(int, int)>;

/// Rows are evaluated on a bounded worker pool and returned in sweep order.
/// Per-row errors are recorded in the row; the sweep continues.
SweepResult run_sweep(const SweepSpec& spec, const Progress& progress = {});

/// Single scenario, with the reference evaluated for the same particle.
ResultRow evaluate_scenario(const Scenario& scenario, const NumericsSpec& numerics,
                            std::shared_ptr<PolarizationCache> cache = nullptr);

struct ConductivityRow {
  int n;
  double xi;
  double sigma_drude;
  double sigma_interband;
  double sigma_total;
};

std::vector<ConductivityRow> conductivity_table(const ConductivitySpec& spec);

inline constexpr const char* kCsvHeader =
    "sweep_var,value,force_N,ref_force_N,ratio,energy_J,terms,tail_bound";
inline constexpr const char* kConductivityHeader = "n,xi_rad_s,sigma_D_S,sigma_I_S,sigma_S";

/// Shortest representation that round-trips; empty for NaN.
std::string format_number(double value);

void write_csv(const SweepResult& result, std::ostream& out);
void write_plotdata(const SweepResult& result, std::ostream& out);
void write_conductivity_csv(const std::vector<ConductivityRow>& rows, std::ostream& out);

/// Files named <dir>/<name>.csv and <dir>/<name>.dat; throws Error(Io) with
/// the path on failure.
void emit_csv(const SweepResult& result, const std::string& path);
void emit_plotdata(const SweepResult& result, const std::string& path);
void emit_conductivity_csv(const std::vector<ConductivityRow>& rows, const std::string& path);

/// Parses the CSV written by write_csv; failed rows come back with error "failed".
SweepResult parse_csv(std::istream& in);

}  // namespace cpforge
