/* Copyright 2026 The cpforge Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.

 */

#ifndef CPFORGE_CPFORGE_H
#define CPFORGE_CPFORGE_H

/* C interface to the Casimir-Polder engine. All functions return a status;
 * on failure cpf_last_error() holds a message for the calling thread.
 * SI units throughout; Fermi levels in eV. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CPF_API __declspec(dllexport)
#else
#define CPF_API __attribute__((visibility("default")))
#endif

typedef enum cpf_status {
  CPF_OK = 0,
  CPF_INVALID_ARGUMENT = 1,
  CPF_UNSUPPORTED_LIMIT = 2,
  CPF_MISSING_INDEX = 3,
  CPF_QUADRATURE_FAILURE = 4,
  CPF_TRUNCATION_FAILURE = 5,
  CPF_ZERO_REFERENCE = 6,
  CPF_IO = 7,
  CPF_PARSE = 8,
  CPF_INTERNAL = 99
} cpf_status;

/* A job: one or more sweeps and/or conductivity tables. */
typedef struct cpf_job cpf_job;
/* Results of running a job. */
typedef struct cpf_output cpf_output;

typedef struct cpf_row {
  double value;
  double force;     /* [N] */
  double ref_force; /* [N], NaN without reference */
  double ratio;     /* NaN without reference */
  double energy;    /* [J] */
  int terms;
  double tail_bound;
  int ok; /* 0 if the row failed; see cpf_output_row_error */
} cpf_row;

typedef struct cpf_point_request {
  double distance;           /* [m] */
  double temperature;        /* [K] */
  const char* interface;     /* e.g. "gold", "graphene:ef=0.5" */
  const char* particle;      /* e.g. "sphere:r=10e-9", "spheroid:rho=0.1,axis=x" */
  const char* reference;     /* "ideal", "gold", "none" or NULL (ideal) */
  double tolerance;          /* <= 0 selects the default 1e-8 */
  int max_terms;             /* <= 0 selects the default 1e6 */
  int threads;               /* 0 = hardware concurrency */
} cpf_point_request;

typedef struct cpf_point_result {
  double energy;
  double force;
  double ref_force;
  double ratio;
  int terms;
  double energy_tail_bound;
  double force_tail_bound;
  double quadrature_error;
} cpf_point_result;

CPF_API const char* cpf_version(void);
CPF_API const char* cpf_last_error(void);
CPF_API const char* cpf_status_string(cpf_status status);

CPF_API cpf_status cpf_job_from_file(const char* path, cpf_job** out);
CPF_API cpf_status cpf_job_from_string(const char* text, cpf_job** out);
CPF_API cpf_status cpf_job_from_preset(const char* name, cpf_job** out);
CPF_API void cpf_job_free(cpf_job* job);

/* Overrides applied to every sweep of the job. */
CPF_API cpf_status cpf_job_set_tolerance(cpf_job* job, double tolerance);
CPF_API cpf_status cpf_job_set_max_terms(cpf_job* job, int max_terms);
CPF_API cpf_status cpf_job_set_threads(cpf_job* job, int threads);

CPF_API size_t cpf_job_size(const cpf_job* job);
CPF_API const char* cpf_job_entry_name(const cpf_job* job, size_t index);

/* Progress callback: (entry index, finished rows, total rows, user data). */
typedef void (*cpf_progress_fn)(size_t, int, int, void*);

/* Runs every entry. Row failures do not fail the call; count them with
 * cpf_output_failures. */
CPF_API cpf_status cpf_job_run(const cpf_job* job, cpf_progress_fn progress, void* user,
                               cpf_output** out);
CPF_API void cpf_output_free(cpf_output* output);

CPF_API size_t cpf_output_size(const cpf_output* output);
CPF_API size_t cpf_output_failures(const cpf_output* output);
/* 1 for a conductivity table, 0 for a sweep. */
CPF_API int cpf_output_is_table(const cpf_output* output, size_t entry);
CPF_API size_t cpf_output_rows(const cpf_output* output, size_t entry);
CPF_API cpf_status cpf_output_row(const cpf_output* output, size_t entry, size_t row,
                                  cpf_row* out);
CPF_API const char* cpf_output_row_error(const cpf_output* output, size_t entry, size_t row);
/* Writes <dir>/<name>.csv for each entry and <dir>/<name>.dat for sweeps. */
CPF_API cpf_status cpf_output_write(const cpf_output* output, const char* dir);
/* CSV text of one entry; the pointer stays valid until the output is freed. */
CPF_API const char* cpf_output_csv(cpf_output* output, size_t entry);

CPF_API size_t cpf_preset_count(void);
CPF_API const char* cpf_preset_name(size_t index);
CPF_API const char* cpf_preset_description(size_t index);

CPF_API cpf_status cpf_point(const cpf_point_request* request, cpf_point_result* out);

CPF_API cpf_status cpf_graphene_conductivity(double fermi_level_ev, double relaxation_time,
                                             double temperature, double xi, double* sigma_drude,
                                             double* sigma_interband);
CPF_API cpf_status cpf_depolarization(double semi_axis_a, double semi_axis_b, double* lx,
                                      double* ly, double* lz);

#ifdef __cplusplus
}
#endif

#endif /* CPFORGE_CPFORGE_H */
