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


#include "cpforge/cpforge.h"

#include <cmath>
#include <filesystem>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpforge/config.hpp"
#include "cpforge/error.hpp"
#include "cpforge/particle.hpp"
#include "cpforge/presets.hpp"
#include "cpforge/summation.hpp"
#include "cpforge/sweep.hpp"

struct cpf_job {
  std::vector<cpforge::RunSpec> runs;
  std::vector<std::string> names;
};

struct cpf_output {
  struct Entry {
    std::string name;
    std::optional<cpforge::SweepResult> sweep;
    std::vector<cpforge::ConductivityRow> table;
    std::string csv;
  };
  std::vector<Entry> entries;
};

namespace {

thread_local std::string last_error;

cpf_status status_of(cpforge::ErrorCode code) { return static_cast<cpf_status>(code); }

// Runs `body`, translating exceptions into status codes.
template <class F>
cpf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CPF_OK;
  } catch (const cpforge::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return CPF_INTERNAL;
}

void check(bool ok, const char* what) {
  if (!ok) cpforge::fail(cpforge::ErrorCode::InvalidArgument, what);
}

cpf_job* make_job(std::vector<cpforge::RunSpec> runs) {
  auto job = std::make_unique<cpf_job>();
  for (const auto& r : runs) job->names.push_back(r.sweep ? r.sweep->name : r.conductivity->name);
  job->runs = std::move(runs);
  return job.release();
}

template <class F>
cpf_status for_each_sweep(cpf_job* job, F&& apply) {
  return guarded([&] {
    check(job != nullptr, "null job");
    for (auto& r : job->runs)
      if (r.sweep) apply(*r.sweep);
    for (auto& r : job->runs)
      if (r.sweep) cpforge::validate(*r.sweep);
  });
}

}  // namespace

extern "C" {

const char* cpf_version(void) { return "1.0.0"; }

const char* cpf_last_error(void) { return last_error.c_str(); }

const char* cpf_status_string(cpf_status status) {
  if (status == CPF_OK) return "ok";
  if (status == CPF_INTERNAL) return "internal error";
  return cpforge::to_string(static_cast<cpforge::ErrorCode>(status));
}

cpf_status cpf_job_from_file(const char* path, cpf_job** out) {
  return guarded([&] {
    check(path != nullptr && out != nullptr, "null argument");
    *out = make_job({cpforge::load_config(path)});
  });
}

cpf_status cpf_job_from_string(const char* text, cpf_job** out) {
  return guarded([&] {
    check(text != nullptr && out != nullptr, "null argument");
    *out = make_job({cpforge::parse_config_text(text)});
  });
}

cpf_status cpf_job_from_preset(const char* name, cpf_job** out) {
  return guarded([&] {
    check(name != nullptr && out != nullptr, "null argument");
    *out = make_job(cpforge::find_preset(name).runs);
  });
}

void cpf_job_free(cpf_job* job) { delete job; }

cpf_status cpf_job_set_tolerance(cpf_job* job, double tolerance) {
  return for_each_sweep(job, [&](cpforge::SweepSpec& s) { s.numerics.tolerance = tolerance; });
}

cpf_status cpf_job_set_max_terms(cpf_job* job, int max_terms) {
  return for_each_sweep(job, [&](cpforge::SweepSpec& s) { s.numerics.max_terms = max_terms; });
}

cpf_status cpf_job_set_threads(cpf_job* job, int threads) {
  return for_each_sweep(job, [&](cpforge::SweepSpec& s) { s.numerics.threads = threads; });
}

size_t cpf_job_size(const cpf_job* job) { return job ? job->runs.size() : 0; }

const char* cpf_job_entry_name(const cpf_job* job, size_t index) {
  if (!job || index >= job->names.size()) return nullptr;
  return job->names[index].c_str();
}

cpf_status cpf_job_run(const cpf_job* job, cpf_progress_fn progress, void* user,
                       cpf_output** out) {
  return guarded([&] {
    check(job != nullptr && out != nullptr, "null argument");
    auto output = std::make_unique<cpf_output>();
    for (std::size_t i = 0; i < job->runs.size(); ++i) {
      const auto& run = job->runs[i];
      cpf_output::Entry e;
      e.name = job->names[i];
      if (run.sweep) {
        cpforge::Progress p;
        if (progress) p = [&](int done, int total) { progress(i, done, total, user); };
        e.sweep = cpforge::run_sweep(*run.sweep, p);
      } else {
        e.table = cpforge::conductivity_table(*run.conductivity);
        if (progress) progress(i, 1, 1, user);
      }
      output->entries.push_back(std::move(e));
    }
    *out = output.release();
  });
}

void cpf_output_free(cpf_output* output) { delete output; }

size_t cpf_output_size(const cpf_output* output) { return output ? output->entries.size() : 0; }

size_t cpf_output_failures(const cpf_output* output) {
  if (!output) return 0;
  size_t n = 0;
  for (const auto& e : output->entries)
    if (e.sweep) n += e.sweep->failures();
  return n;
}

int cpf_output_is_table(const cpf_output* output, size_t entry) {
  if (!output || entry >= output->entries.size()) return 0;
  return output->entries[entry].sweep ? 0 : 1;
}

size_t cpf_output_rows(const cpf_output* output, size_t entry) {
  if (!output || entry >= output->entries.size()) return 0;
  const auto& e = output->entries[entry];
  return e.sweep ? e.sweep->rows.size() : e.table.size();
}

cpf_status cpf_output_row(const cpf_output* output, size_t entry, size_t row, cpf_row* out) {
  return guarded([&] {
    check(output != nullptr && out != nullptr, "null argument");
    check(entry < output->entries.size(), "entry index out of range");
    const auto& e = output->entries[entry];
    check(e.sweep.has_value(), "entry is a conductivity table");
    check(row < e.sweep->rows.size(), "row index out of range");
    const auto& r = e.sweep->rows[row];
    *out = {r.value, r.force, r.ref_force, r.ratio, r.energy, r.terms, r.tail_bound, r.ok() ? 1 : 0};
  });
}

const char* cpf_output_row_error(const cpf_output* output, size_t entry, size_t row) {
  if (!output || entry >= output->entries.size()) return nullptr;
  const auto& e = output->entries[entry];
  if (!e.sweep || row >= e.sweep->rows.size()) return nullptr;
  return e.sweep->rows[row].error.c_str();
}

cpf_status cpf_output_write(const cpf_output* output, const char* dir) {
  return guarded([&] {
    check(output != nullptr && dir != nullptr, "null argument");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) cpforge::fail(cpforge::ErrorCode::Io, std::string("cannot create '") + dir + "'");
    for (const auto& e : output->entries) {
      const fs::path stem = fs::path(dir) / e.name;
      if (e.sweep) {
        cpforge::emit_csv(*e.sweep, stem.string() + ".csv");
        cpforge::emit_plotdata(*e.sweep, stem.string() + ".dat");
      } else {
        cpforge::emit_conductivity_csv(e.table, stem.string() + ".csv");
      }
    }
  });
}

const char* cpf_output_csv(cpf_output* output, size_t entry) {
  if (!output || entry >= output->entries.size()) return nullptr;
  auto& e = output->entries[entry];
  std::ostringstream s;
  if (e.sweep) cpforge::write_csv(*e.sweep, s);
  else cpforge::write_conductivity_csv(e.table, s);
  e.csv = s.str();
  return e.csv.c_str();
}

size_t cpf_preset_count(void) { return cpforge::presets().size(); }

const char* cpf_preset_name(size_t index) {
  const auto& all = cpforge::presets();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

const char* cpf_preset_description(size_t index) {
  const auto& all = cpforge::presets();
  return index < all.size() ? all[index].description.c_str() : nullptr;
}

cpf_status cpf_point(const cpf_point_request* request, cpf_point_result* out) {
  return guarded([&] {
    check(request != nullptr && out != nullptr, "null argument");
    check(request->interface != nullptr && request->particle != nullptr,
          "interface and particle specs are required");
    cpforge::Scenario sc;
    sc.distance = request->distance;
    sc.temperature = request->temperature;
    sc.interface = cpforge::parse_interface_spec(request->interface);
    sc.particle = cpforge::parse_particle_spec(request->particle);
    sc.reference = request->reference ? cpforge::parse_reference(request->reference)
                                      : cpforge::Reference::IdealMetal;

    cpforge::SummationOptions opt;
    if (request->tolerance > 0.0) opt.rel_tol = request->tolerance;
    if (request->max_terms > 0) opt.max_terms = request->max_terms;
    opt.threads = request->threads;

    const auto particle = cpforge::build_particle(sc.particle);
    const auto interface = cpforge::build_interface(sc.interface, sc.temperature);
    const auto r = cpforge::cp_evaluate(sc.temperature, sc.distance, particle, interface, opt);
    *out = {r.energy, r.force, NAN, NAN, r.terms_used, r.energy_tail_bound,
            r.force_tail_bound, r.quadrature_error};
    if (const auto ref = cpforge::reference_interface(sc.reference)) {
      const auto rr = cpforge::cp_evaluate(sc.temperature, sc.distance, particle, *ref, opt);
      out->ref_force = rr.force;
      out->ratio = cpforge::normalize(r, rr);
    }
  });
}

cpf_status cpf_graphene_conductivity(double fermi_level_ev, double relaxation_time,
                                     double temperature, double xi, double* sigma_drude,
                                     double* sigma_interband) {
  return guarded([&] {
    check(sigma_drude != nullptr && sigma_interband != nullptr, "null argument");
    const auto sheet =
        cpforge::GrapheneSheet::from_electron_volts(fermi_level_ev, relaxation_time, temperature);
    *sigma_drude = cpforge::sigma_drude(sheet, xi);
    *sigma_interband = cpforge::sigma_interband(sheet, xi);
  });
}

cpf_status cpf_depolarization(double semi_axis_a, double semi_axis_b, double* lx, double* ly,
                              double* lz) {
  return guarded([&] {
    check(lx != nullptr && ly != nullptr && lz != nullptr, "null argument");
    const auto l = cpforge::depolarization_factors(semi_axis_a, semi_axis_b);
    *lx = l.x;
    *ly = l.y;
    *lz = l.z;
  });
}

}  // extern "C"
