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


// Command-line front end; talks to the engine only through the C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "cpforge/cpforge.h"

namespace {

struct Overrides {
  double tolerance = 0.0;
  int max_terms = 0;
  int threads = -1;
};

int report(cpf_status status) {
  std::fprintf(stderr, "cpforge: %s: %s\n", cpf_status_string(status), cpf_last_error());
  return 2;
}

std::string default_out_dir() {
  const char* env = std::getenv("CPFORGE_OUT_DIR");
  return env && *env ? env : "cpforge-out";
}

void progress(size_t entry, int done, int total, void* user) {
  const auto* job = static_cast<const cpf_job*>(user);
  std::fprintf(stderr, "\r%-40s %4d/%d", cpf_job_entry_name(job, entry), done, total);
  if (done == total) std::fputc('\n', stderr);
}

int run_job(cpf_job* job, const Overrides& o, const std::string& out_dir, bool quiet) {
  cpf_status s = CPF_OK;
  if (o.tolerance > 0.0 && (s = cpf_job_set_tolerance(job, o.tolerance)) != CPF_OK) return report(s);
  if (o.max_terms > 0 && (s = cpf_job_set_max_terms(job, o.max_terms)) != CPF_OK) return report(s);
  if (o.threads >= 0 && (s = cpf_job_set_threads(job, o.threads)) != CPF_OK) return report(s);

  cpf_output* out = nullptr;
  if ((s = cpf_job_run(job, quiet ? nullptr : progress, job, &out)) != CPF_OK) return report(s);
  s = cpf_output_write(out, out_dir.c_str());
  if (s != CPF_OK) {
    cpf_output_free(out);
    return report(s);
  }
  for (size_t e = 0; e < cpf_output_size(out); ++e) {
    std::printf("%s/%s.csv\n", out_dir.c_str(), cpf_job_entry_name(job, e));
    if (cpf_output_is_table(out, e)) continue;
    for (size_t r = 0; r < cpf_output_rows(out, e); ++r) {
      cpf_row row;
      if (cpf_output_row(out, e, r, &row) == CPF_OK && !row.ok)
        std::fprintf(stderr, "cpforge: %s row %zu (value %.6g) failed: %s\n",
                     cpf_job_entry_name(job, e), r, row.value, cpf_output_row_error(out, e, r));
    }
  }
  const size_t failures = cpf_output_failures(out);
  cpf_output_free(out);
  if (failures > 0) {
    std::fprintf(stderr, "cpforge: %zu row(s) failed\n", failures);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder force between nanoparticles and planar interfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cpf_version()));

  Overrides o;
  auto add_numerics = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", o.tolerance, "relative truncation tolerance")
        ->check(CLI::Range(1e-15, 0.5));
    cmd->add_option("--max-terms", o.max_terms, "Matsubara term cap")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  std::string out_dir = default_out_dir();
  bool quiet = false;

  auto* run = app.add_subcommand("run", "run a sweep or table from a config file");
  std::string config;
  run->add_option("config", config, "config file")->required();
  run->add_option("--out", out_dir, "output directory (default $CPFORGE_OUT_DIR)");
  run->add_flag("-q,--quiet", quiet, "no progress output");
  add_numerics(run);

  auto* preset = app.add_subcommand("preset", "run a built-in figure preset");
  std::string preset_name;
  bool list = false;
  preset->add_option("name", preset_name, "preset name");
  preset->add_flag("--list", list, "list presets");
  preset->add_option("--out", out_dir, "output directory (default $CPFORGE_OUT_DIR)");
  preset->add_flag("-q,--quiet", quiet, "no progress output");
  add_numerics(preset);

  auto* point = app.add_subcommand("point", "evaluate a single configuration");
  cpf_point_request req{};
  req.temperature = 300.0;
  std::string interface = "gold", particle = "sphere", reference = "ideal";
  point->add_option("--d", req.distance, "distance [m]")->required()->check(CLI::PositiveNumber);
  point->add_option("--T", req.temperature, "temperature [K]")->check(CLI::PositiveNumber);
  point->add_option("--interface", interface,
                    "ideal | gold | drude:wp=..,gamma=.. | graphene[:ef=..,tau=..] | "
                    "graphene-nonlocal");
  point->add_option("--particle", particle,
                    "sphere[:r=..] | spheroid:rho=..[,axis=z|x] | spheroid:a=..,b=..");
  point->add_option("--reference", reference, "ideal | gold | none");
  add_numerics(point);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the error status.
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*run) {
    cpf_job* job = nullptr;
    if (cpf_status s = cpf_job_from_file(config.c_str(), &job); s != CPF_OK) return report(s);
    const int rc = run_job(job, o, out_dir, quiet);
    cpf_job_free(job);
    return rc;
  }

  if (*preset) {
    if (list || preset_name.empty()) {
      for (size_t i = 0; i < cpf_preset_count(); ++i)
        std::printf("%-12s %s\n", cpf_preset_name(i), cpf_preset_description(i));
      return preset_name.empty() && !list ? 2 : 0;
    }
    cpf_job* job = nullptr;
    if (cpf_status s = cpf_job_from_preset(preset_name.c_str(), &job); s != CPF_OK)
      return report(s);
    const int rc = run_job(job, o, out_dir, quiet);
    cpf_job_free(job);
    return rc;
  }

  req.interface = interface.c_str();
  req.particle = particle.c_str();
  req.reference = reference.c_str();
  req.tolerance = o.tolerance;
  req.max_terms = o.max_terms;
  req.threads = o.threads < 0 ? 0 : o.threads;
  cpf_point_result res;
  if (cpf_status s = cpf_point(&req, &res); s != CPF_OK) return report(s);
  std::printf("force_N      %.17g\n", res.force);
  std::printf("energy_J     %.17g\n", res.energy);
  if (!std::isnan(res.ratio)) {
    std::printf("ref_force_N  %.17g\n", res.ref_force);
    std::printf("ratio        %.17g\n", res.ratio);
  }
  std::printf("terms        %d\n", res.terms);
  std::printf("tail_bound   %.3g\n", res.force_tail_bound);
  std::printf("quad_error   %.3g\n", res.quadrature_error);
  return 0;
}
