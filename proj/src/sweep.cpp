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


#include "cpforge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"

namespace cpforge {

namespace {

int pool_size(int requested, int rows) {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  return std::clamp(requested > 0 ? requested : hw, 1, rows);
}

double parse_field(const std::string& field, int line) {
  if (field.empty()) return NAN;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || end != field.data() + field.size())
    fail(ErrorCode::Parse, "csv line " + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

template <class Writer>
void emit_file(const std::string& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace

std::size_t SweepResult::failures() const noexcept {
  return std::count_if(rows.begin(), rows.end(), [](const ResultRow& r) { return !r.ok(); });
}

ResultRow evaluate_scenario(const Scenario& sc, const NumericsSpec& numerics,
                            std::shared_ptr<PolarizationCache> cache) {
  const Spheroid particle = build_particle(sc.particle);
  const InterfaceModel interface = build_interface(sc.interface, sc.temperature);
  SummationOptions opt;
  opt.rel_tol = numerics.tolerance;
  opt.max_terms = numerics.max_terms;
  opt.threads = numerics.threads;
  opt.cache = std::move(cache);

  ResultRow row;
  const CPResult r = cp_evaluate(sc.temperature, sc.distance, particle, interface, opt);
  row.force = r.force;
  row.energy = r.energy;
  row.terms = r.terms_used;
  row.tail_bound = r.force_tail_bound;
  if (const auto ref = reference_interface(sc.reference)) {
    opt.cache.reset();
    const CPResult rr = cp_evaluate(sc.temperature, sc.distance, particle, *ref, opt);
    row.ref_force = rr.force;
    row.ratio = normalize(r, rr);
  }
  return row;
}

SweepResult run_sweep(const SweepSpec& spec, const Progress& progress) {
  validate(spec);
  const auto values = sweep_values(spec);
  const int total = static_cast<int>(values.size());

  SweepResult result;
  result.name = spec.name;
  result.variable = spec.variable;
  result.rows.resize(total);

  // Nonlocal tensor values are shared by every row at the same distance.
  auto cache = spec.scenario.interface.kind == InterfaceKind::GrapheneNonlocal
                   ? std::make_shared<PolarizationCache>()
                   : nullptr;
  const int workers = pool_size(spec.numerics.threads, total);
  NumericsSpec row_numerics = spec.numerics;
  row_numerics.threads = 1;

  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (int i = next++; i < total; i = next++) {
      ResultRow& row = result.rows[i];
      try {
        row = evaluate_scenario(scenario_at(spec, values[i]), row_numerics, cache);
      } catch (const Error& e) {
        row = ResultRow{};
        row.error = std::string(to_string(e.code())) + ": " + e.what();
      } catch (const std::exception& e) {
        row = ResultRow{};
        row.error = e.what();
      }
      row.value = values[i];
      const int d = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(d, total);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < result.rows.size(); ++i)
    if (!result.rows[i].ok())
      result.warnings.push_back("row " + std::to_string(i) + " (" +
                                format_number(result.rows[i].value) +
                                "): " + result.rows[i].error);
  const ParticleSpec& p = spec.scenario.particle;
  if (!p.spheroid && spec.variable != SweepVariable::AspectRatio && p.radius > kMinimalSkinDepth)
    result.warnings.push_back("particle radius exceeds the minimal skin depth (21 nm)");
  return result;
}

std::vector<ConductivityRow> conductivity_table(const ConductivitySpec& spec) {
  require(spec.n_max >= 1, "n_max must be >= 1");
  const auto sheet = GrapheneSheet::from_electron_volts(spec.fermi_level_ev, spec.relaxation_time,
                                                        spec.temperature);
  const MatsubaraGrid grid(spec.temperature);
  std::vector<ConductivityRow> rows;
  for (int n = 1; n <= spec.n_max; ++n) {
    const double xi = grid.frequency(n);
    const double sd = sigma_drude(sheet, xi);
    const double si = sigma_interband(sheet, xi);
    rows.push_back({n, xi, sd, si, sd + si});
  }
  return rows;
}

std::string format_number(double value) {
  if (std::isnan(value)) return {};
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  const std::string var(to_string(result.variable));
  for (const ResultRow& r : result.rows) {
    out << var << ',' << format_number(r.value) << ',' << format_number(r.force) << ','
        << format_number(r.ref_force) << ',' << format_number(r.ratio) << ','
        << format_number(r.energy) << ',' << (r.ok() ? std::to_string(r.terms) : "") << ','
        << format_number(r.tail_bound) << '\n';
  }
}

void write_plotdata(const SweepResult& result, std::ostream& out) {
  const bool ratio = std::any_of(result.rows.begin(), result.rows.end(),
                                 [](const ResultRow& r) { return !std::isnan(r.ratio); });
  out << "# " << result.name << '\n'
      << "# " << to_string(result.variable) << ' ' << (ratio ? "ratio" : "force_N") << '\n';
  for (const ResultRow& r : result.rows) {
    if (!r.ok()) continue;
    out << format_number(r.value) << ' ' << format_number(ratio ? r.ratio : r.force) << '\n';
  }
}

void write_conductivity_csv(const std::vector<ConductivityRow>& rows, std::ostream& out) {
  out << kConductivityHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << format_number(r.xi) << ',' << format_number(r.sigma_drude) << ','
        << format_number(r.sigma_interband) << ',' << format_number(r.sigma_total) << '\n';
}

void emit_csv(const SweepResult& result, const std::string& path) {
  emit_file(path, [&](std::ostream& out) { write_csv(result, out); });
}

void emit_plotdata(const SweepResult& result, const std::string& path) {
  emit_file(path, [&](std::ostream& out) { write_plotdata(result, out); });
}

void emit_conductivity_csv(const std::vector<ConductivityRow>& rows, const std::string& path) {
  emit_file(path, [&](std::ostream& out) { write_conductivity_csv(rows, out); });
}

SweepResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    fail(ErrorCode::Parse, "csv: missing or unexpected header");
  SweepResult result;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 8) fail(ErrorCode::Parse, "csv line " + std::to_string(number) + ": expected 8 fields");
    if (f[0] == "distance") result.variable = SweepVariable::Distance;
    else if (f[0] == "aspect_ratio") result.variable = SweepVariable::AspectRatio;
    else if (f[0] == "fermi_level") result.variable = SweepVariable::FermiLevel;
    else fail(ErrorCode::Parse, "csv line " + std::to_string(number) + ": bad sweep_var");
    ResultRow r;
    r.value = parse_field(f[1], number);
    r.force = parse_field(f[2], number);
    r.ref_force = parse_field(f[3], number);
    r.ratio = parse_field(f[4], number);
    r.energy = parse_field(f[5], number);
    r.terms = f[6].empty() ? 0 : static_cast<int>(parse_field(f[6], number));
    r.tail_bound = parse_field(f[7], number);
    if (f[6].empty()) r.error = "failed";
    result.rows.push_back(std::move(r));
  }
  return result;
}

}  // namespace cpforge
