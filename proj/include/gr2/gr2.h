// Copyright 2026 The gr2sim Authors
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

/* C interface to the gr2 library. All functions return a gr2_status; on
 * failure gr2_last_error() describes the problem for the calling thread.
 * Handles are opaque and owned by the caller until passed to their _free
 * function. Matrices are 16 doubles in row-major order over
 * (x, p_x, y, p_y). */

#ifndef GR2_GR2_H
#define GR2_GR2_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GR2_BUILDING_LIBRARY)
#    define GR2_API __declspec(dllexport)
#  else
#    define GR2_API __declspec(dllimport)
#  endif
#else
#  define GR2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gr2_status {
  GR2_OK = 0,
  GR2_ERR_NULL_ARGUMENT = 1,
  GR2_ERR_INVALID_PARAMS = 2,
  GR2_ERR_NON_PHYSICAL = 3,
  GR2_ERR_DEGENERATE_B = 4,
  GR2_ERR_SINGULAR_SYSTEM = 5,
  GR2_ERR_INTERNAL_CONSISTENCY = 6,
  GR2_ERR_PARSE = 7,
  GR2_ERR_VALIDATION = 8,
  GR2_ERR_UNKNOWN_FIGURE = 9,
  GR2_ERR_IO = 10,
  GR2_ERR_OUT_OF_RANGE = 11,
  GR2_ERR_INTERNAL = 12
} gr2_status;

typedef enum gr2_direction { GR2_A_GIVEN_B = 0, GR2_B_GIVEN_A = 1 } gr2_direction;

typedef enum gr2_branch {
  GR2_BRANCH_CONDITION_NEGATIVE = 0,
  GR2_BRANCH_OTHERWISE = 1
} gr2_branch;

typedef struct gr2_system {
  double mass;
  double omega1;
  double omega2;
  double lambda;
} gr2_system;

/* Standard form and correlation measures of one state. a, b, c_plus and
 * c_minus are oriented for the requested direction. */
typedef struct gr2_measures {
  double a;
  double b;
  double c_plus;
  double c_minus;
  double i2_mutual;
  double j2_classical;
  double d2_discord;
  double epsilon2;
  gr2_branch branch;
  double quartic;
  int physical;
} gr2_measures;

typedef struct gr2_row {
  double t;
  double temperature;
  int has_standard_form;
  double a;
  double b;
  double c_plus;
  double c_minus;
  int has_measures;
  double i2_mutual;
  double j2_classical;
  double d2_discord;
  gr2_branch branch;
  int physical;
} gr2_row;

typedef struct gr2_config gr2_config;
typedef struct gr2_sweep gr2_sweep;

GR2_API const char* gr2_version(void);
GR2_API const char* gr2_status_string(gr2_status status);
/* Message for the most recent failure on this thread; empty after success. */
GR2_API const char* gr2_last_error(void);

/* Config handles. parse/load apply n_overrides key=value pairs after the
 * text and validate the result; figure/new return defaults that may be
 * modified with gr2_config_set and must then pass gr2_config_validate. */
GR2_API gr2_status gr2_config_new(gr2_config** out);
GR2_API gr2_status gr2_config_parse(const char* text, const char* const* keys,
                                    const char* const* values, size_t n_overrides,
                                    gr2_config** out);
GR2_API gr2_status gr2_config_load(const char* path, const char* const* keys,
                                   const char* const* values, size_t n_overrides,
                                   gr2_config** out);
GR2_API gr2_status gr2_config_figure(int index, gr2_config** out);
GR2_API gr2_status gr2_config_set(gr2_config* cfg, const char* key, const char* value);
GR2_API gr2_status gr2_config_validate(const gr2_config* cfg);
/* Pointer stays valid until the config is modified or freed. */
GR2_API gr2_status gr2_config_output(const gr2_config* cfg, const char** path);
GR2_API size_t gr2_config_key_count(void);
GR2_API const char* gr2_config_key(size_t index);
GR2_API void gr2_config_free(gr2_config* cfg);

/* threads == 0 selects the hardware concurrency. */
GR2_API gr2_status gr2_sweep_run(const gr2_config* cfg, unsigned threads, gr2_sweep** out);
GR2_API size_t gr2_sweep_size(const gr2_sweep* sweep);
GR2_API gr2_status gr2_sweep_row(const gr2_sweep* sweep, size_t index, gr2_row* out);
/* path NULL, "" or "-" writes to standard output. */
GR2_API gr2_status gr2_sweep_write_csv(const gr2_sweep* sweep, const char* path);
GR2_API void gr2_sweep_free(gr2_sweep* sweep);

GR2_API gr2_status gr2_covariance_read(const char* path, double cov[16]);
GR2_API gr2_status gr2_measures_compute(const double cov[16], gr2_direction direction,
                                        gr2_measures* out);
GR2_API gr2_status gr2_evolve(const double cov0[16], const gr2_system* sys, double temperature,
                              double t, double out[16]);

#ifdef __cplusplus
}
#endif

#endif /* GR2_GR2_H */
