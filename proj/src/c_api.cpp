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

#include <exception>
#include <new>
#include <string>

#include "gr2/dynamics.hpp"
#include "gr2/error.hpp"
#include "gr2/gr2.h"
#include "gr2/sweep.hpp"

struct gr2_config {
  gr2::SweepConfig cfg;
};

struct gr2_sweep {
  std::vector<gr2::SweepRow> rows;
};

namespace {

thread_local std::string g_last_error;

gr2_status to_status(gr2::ErrorCode code) {
  using gr2::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParams: return GR2_ERR_INVALID_PARAMS;
    case ErrorCode::NonPhysicalInput: return GR2_ERR_NON_PHYSICAL;
    case ErrorCode::DegenerateB: return GR2_ERR_DEGENERATE_B;
    case ErrorCode::SingularSystem: return GR2_ERR_SINGULAR_SYSTEM;
    case ErrorCode::InternalConsistency: return GR2_ERR_INTERNAL_CONSISTENCY;
    case ErrorCode::ParseError: return GR2_ERR_PARSE;
    case ErrorCode::ValidationError: return GR2_ERR_VALIDATION;
    case ErrorCode::UnknownFigure: return GR2_ERR_UNKNOWN_FIGURE;
    case ErrorCode::IoError: return GR2_ERR_IO;
  }
  return GR2_ERR_INTERNAL;
}

gr2_status fail(gr2_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
gr2_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return GR2_OK;
  } catch (const gr2::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GR2_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GR2_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GR2_ERR_INTERNAL, "unknown exception");
  }
}

gr2::Mat4 load_matrix(const double m[16]) {
  gr2::Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m[4 * i + j];
  return out;
}

void store_matrix(const gr2::Mat4& m, double out[16]) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = m(i, j);
}

gr2::Overrides collect_overrides(const char* const* keys, const char* const* values, size_t n) {
  gr2::Overrides overrides;
  if (n > 0 && (keys == nullptr || values == nullptr)) {
    throw gr2::Error(gr2::ErrorCode::InvalidParams, "override arrays are null");
  }
  for (size_t i = 0; i < n; ++i) {
    if (keys[i] == nullptr || values[i] == nullptr) {
      throw gr2::Error(gr2::ErrorCode::InvalidParams, "override entry is null");
    }
    overrides.emplace_back(keys[i], values[i]);
  }
  return overrides;
}

#define GR2_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(GR2_ERR_NULL_ARGUMENT, #ptr " is null")

}  // namespace

extern "C" {

const char* gr2_version(void) { return "1.0.0"; }

const char* gr2_status_string(gr2_status status) {
  switch (status) {
    case GR2_OK: return "ok";
    case GR2_ERR_NULL_ARGUMENT: return "null argument";
    case GR2_ERR_INVALID_PARAMS: return "invalid parameters";
    case GR2_ERR_NON_PHYSICAL: return "non-physical input";
    case GR2_ERR_DEGENERATE_B: return "degenerate b";
    case GR2_ERR_SINGULAR_SYSTEM: return "singular system";
    case GR2_ERR_INTERNAL_CONSISTENCY: return "internal consistency";
    case GR2_ERR_PARSE: return "parse error";
    case GR2_ERR_VALIDATION: return "validation error";
    case GR2_ERR_UNKNOWN_FIGURE: return "unknown figure";
    case GR2_ERR_IO: return "i/o error";
    case GR2_ERR_OUT_OF_RANGE: return "index out of range";
    case GR2_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gr2_last_error(void) { return g_last_error.c_str(); }

gr2_status gr2_config_new(gr2_config** out) {
  GR2_REQUIRE(out);
  return guarded([&] { *out = new gr2_config{}; });
}

gr2_status gr2_config_parse(const char* text, const char* const* keys, const char* const* values,
                            size_t n_overrides, gr2_config** out) {
  GR2_REQUIRE(text);
  GR2_REQUIRE(out);
  return guarded([&] {
    auto cfg = gr2::parse_config(text, collect_overrides(keys, values, n_overrides));
    *out = new gr2_config{std::move(cfg)};
  });
}

gr2_status gr2_config_load(const char* path, const char* const* keys, const char* const* values,
                           size_t n_overrides, gr2_config** out) {
  GR2_REQUIRE(path);
  GR2_REQUIRE(out);
  return guarded([&] {
    const std::string text = gr2::read_text_file(path);
    auto cfg = gr2::parse_config(text, collect_overrides(keys, values, n_overrides));
    *out = new gr2_config{std::move(cfg)};
  });
}

gr2_status gr2_config_figure(int index, gr2_config** out) {
  GR2_REQUIRE(out);
  return guarded([&] { *out = new gr2_config{gr2::figure_preset(index)}; });
}

gr2_status gr2_config_set(gr2_config* cfg, const char* key, const char* value) {
  GR2_REQUIRE(cfg);
  GR2_REQUIRE(key);
  GR2_REQUIRE(value);
  return guarded([&] { gr2::apply_setting(cfg->cfg, key, value); });
}

gr2_status gr2_config_validate(const gr2_config* cfg) {
  GR2_REQUIRE(cfg);
  return guarded([&] { gr2::validate(cfg->cfg); });
}

gr2_status gr2_config_output(const gr2_config* cfg, const char** path) {
  GR2_REQUIRE(cfg);
  GR2_REQUIRE(path);
  *path = cfg->cfg.output.c_str();
  g_last_error.clear();
  return GR2_OK;
}

size_t gr2_config_key_count(void) { return gr2::config_keys().size(); }

const char* gr2_config_key(size_t index) {
  const auto& keys = gr2::config_keys();
  // Every key is a string literal, so data() is NUL-terminated.
  return index < keys.size() ? keys[index].data() : nullptr;
}

void gr2_config_free(gr2_config* cfg) { delete cfg; }

gr2_status gr2_sweep_run(const gr2_config* cfg, unsigned threads, gr2_sweep** out) {
  GR2_REQUIRE(cfg);
  GR2_REQUIRE(out);
  return guarded([&] { *out = new gr2_sweep{gr2::run_sweep(cfg->cfg, threads)}; });
}

size_t gr2_sweep_size(const gr2_sweep* sweep) { return sweep == nullptr ? 0 : sweep->rows.size(); }

gr2_status gr2_sweep_row(const gr2_sweep* sweep, size_t index, gr2_row* out) {
  GR2_REQUIRE(sweep);
  GR2_REQUIRE(out);
  if (index >= sweep->rows.size()) {
    return fail(GR2_ERR_OUT_OF_RANGE, "row " + std::to_string(index) + " of " +
                                          std::to_string(sweep->rows.size()));
  }
  const gr2::SweepRow& row = sweep->rows[index];
  *out = gr2_row{};
  out->t = row.t;
  out->temperature = row.temperature;
  if (row.standard_form) {
    out->has_standard_form = 1;
    out->a = row.standard_form->a;
    out->b = row.standard_form->b;
    out->c_plus = row.standard_form->c_plus;
    out->c_minus = row.standard_form->c_minus;
  }
  if (row.measures) {
    out->has_measures = 1;
    out->i2_mutual = row.measures->i2_mutual;
    out->j2_classical = row.measures->j2_classical;
    out->d2_discord = row.measures->d2_discord;
    out->branch = row.measures->branch == gr2::Branch::ConditionNegative
                      ? GR2_BRANCH_CONDITION_NEGATIVE
                      : GR2_BRANCH_OTHERWISE;
  }
  out->physical = row.physical ? 1 : 0;
  g_last_error.clear();
  return GR2_OK;
}

gr2_status gr2_sweep_write_csv(const gr2_sweep* sweep, const char* path) {
  GR2_REQUIRE(sweep);
  return guarded([&] { gr2::write_csv(sweep->rows, std::string(path == nullptr ? "" : path)); });
}

void gr2_sweep_free(gr2_sweep* sweep) { delete sweep; }

gr2_status gr2_covariance_read(const char* path, double cov[16]) {
  GR2_REQUIRE(path);
  GR2_REQUIRE(cov);
  return guarded([&] { store_matrix(gr2::read_covariance_file(path).matrix(), cov); });
}

gr2_status gr2_measures_compute(const double cov[16], gr2_direction direction, gr2_measures* out) {
  GR2_REQUIRE(cov);
  GR2_REQUIRE(out);
  if (direction != GR2_A_GIVEN_B && direction != GR2_B_GIVEN_A) {
    return fail(GR2_ERR_INVALID_PARAMS, "unknown direction");
  }
  return guarded([&] {
    const auto dir =
        direction == GR2_A_GIVEN_B ? gr2::Direction::A_given_B : gr2::Direction::B_given_A;
    const gr2::CorrelationMeasures m = gr2::measures(gr2::CovarianceMatrix(load_matrix(cov)), dir);
    *out = gr2_measures{};
    out->a = m.standard_form.a;
    out->b = m.standard_form.b;
    out->c_plus = m.standard_form.c_plus;
    out->c_minus = m.standard_form.c_minus;
    out->i2_mutual = m.i2_mutual;
    out->j2_classical = m.j2_classical;
    out->d2_discord = m.d2_discord;
    out->epsilon2 = m.epsilon2;
    out->branch = m.branch == gr2::Branch::ConditionNegative ? GR2_BRANCH_CONDITION_NEGATIVE
                                                             : GR2_BRANCH_OTHERWISE;
    out->quartic = m.physicality.quartic;
    out->physical = m.physicality.physical ? 1 : 0;
  });
}

gr2_status gr2_evolve(const double cov0[16], const gr2_system* sys, double temperature, double t,
                      double out[16]) {
  GR2_REQUIRE(cov0);
  GR2_REQUIRE(sys);
  GR2_REQUIRE(out);
  return guarded([&] {
    const gr2::SystemParams params{sys->mass, sys->omega1, sys->omega2, sys->lambda};
    const auto sigma = gr2::evolve(gr2::CovarianceMatrix(load_matrix(cov0)), params,
                                   gr2::BathParams{temperature}, t);
    store_matrix(sigma.matrix(), out);
  });
}

}  // extern "C"
