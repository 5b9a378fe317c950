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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gr2/gr2.h"

namespace {

struct Overrides {
  std::map<std::string, std::string> values;

  void add_flags(CLI::App* cmd) {
    for (size_t i = 0; i < gr2_config_key_count(); ++i) {
      const std::string key = gr2_config_key(i);
      cmd->add_option("--" + key, values[key], "override config key '" + key + "'");
    }
  }

  // CLI11 leaves untouched entries empty.
  std::vector<std::pair<std::string, std::string>> given() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : values)
      if (!v.empty()) out.emplace_back(k, v);
    return out;
  }
};

int report(gr2_status status) {
  std::fprintf(stderr, "gr2sim: %s: %s\n", gr2_status_string(status), gr2_last_error());
  return 1;
}

int run_and_write(gr2_config* cfg, unsigned threads) {
  gr2_status st = gr2_config_validate(cfg);
  if (st != GR2_OK) return report(st);
  gr2_sweep* sweep = nullptr;
  st = gr2_sweep_run(cfg, threads, &sweep);
  if (st != GR2_OK) return report(st);
  const char* output = nullptr;
  gr2_config_output(cfg, &output);
  st = gr2_sweep_write_csv(sweep, output);
  gr2_sweep_free(sweep);
  return st == GR2_OK ? 0 : report(st);
}

int run_config(const std::string& config_path,
               const std::vector<std::pair<std::string, std::string>>& overrides,
               unsigned threads) {
  std::vector<const char*> keys;
  std::vector<const char*> vals;
  for (const auto& [k, v] : overrides) {
    keys.push_back(k.c_str());
    vals.push_back(v.c_str());
  }
  gr2_config* cfg = nullptr;
  const gr2_status st =
      config_path.empty()
          ? gr2_config_parse("", keys.data(), vals.data(), keys.size(), &cfg)
          : gr2_config_load(config_path.c_str(), keys.data(), vals.data(), keys.size(), &cfg);
  if (st != GR2_OK) return report(st);
  const int rc = run_and_write(cfg, threads);
  gr2_config_free(cfg);
  return rc;
}

int run_figure(int index, const std::vector<std::pair<std::string, std::string>>& overrides,
               unsigned threads) {
  gr2_config* cfg = nullptr;
  gr2_status st = gr2_config_figure(index, &cfg);
  if (st != GR2_OK) return report(st);
  for (const auto& [k, v] : overrides) {
    st = gr2_config_set(cfg, k.c_str(), v.c_str());
    if (st != GR2_OK) {
      gr2_config_free(cfg);
      return report(st);
    }
  }
  const int rc = run_and_write(cfg, threads);
  gr2_config_free(cfg);
  return rc;
}

int run_measures(const std::string& path, const std::string& direction) {
  gr2_direction dir = GR2_A_GIVEN_B;
  if (direction == "B_given_A" || direction == "B|A") {
    dir = GR2_B_GIVEN_A;
  } else if (direction != "A_given_B" && direction != "A|B") {
    std::fprintf(stderr, "gr2sim: unknown direction '%s'\n", direction.c_str());
    return 1;
  }
  double cov[16];
  gr2_status st = gr2_covariance_read(path.c_str(), cov);
  if (st != GR2_OK) return report(st);
  gr2_measures m;
  st = gr2_measures_compute(cov, dir, &m);
  if (st != GR2_OK) return report(st);
  std::printf("a,b,c_plus,c_minus,I2,J2,D2,epsilon2,branch,physical\n");
  std::printf("%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s,%s\n", m.a, m.b, m.c_plus,
              m.c_minus, m.i2_mutual + 0.0, m.j2_classical + 0.0, m.d2_discord + 0.0, m.epsilon2,
              m.branch == GR2_BRANCH_CONDITION_NEGATIVE ? "condition_negative" : "otherwise",
              m.physical ? "true" : "false");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian Renyi-2 correlations of two damped oscillators in a thermal bath"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  std::string config_path;

  auto* sweep = app.add_subcommand("sweep", "evaluate the full time x temperature grid");
  Overrides sweep_over;
  sweep->add_option("--config", config_path, "key = value configuration file");
  sweep_over.add_flags(sweep);

  auto* evolve = app.add_subcommand("evolve", "evaluate the time grid at one bath temperature");
  Overrides evolve_over;
  double temperature = 0.0;
  evolve->add_option("--config", config_path, "key = value configuration file");
  evolve->add_option("--temperature", temperature, "bath temperature")->required();
  evolve_over.add_flags(evolve);

  auto* figure = app.add_subcommand("figure", "run a figure preset (1-5)");
  Overrides figure_over;
  int figure_index = 0;
  figure->add_option("index", figure_index, "figure number")->required();
  figure_over.add_flags(figure);

  auto* measures = app.add_subcommand("measures", "correlations of one covariance matrix");
  std::string cov_path;
  std::string direction = "A_given_B";
  measures->add_option("file", cov_path, "4x4 whitespace-separated covariance")->required();
  measures->add_option("--direction", direction, "A_given_B or B_given_A");

  CLI11_PARSE(app, argc, argv);

  if (*sweep) return run_config(config_path, sweep_over.given(), threads);
  if (*evolve) {
    auto over = evolve_over.given();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", temperature);
    over.emplace_back("T_start", buf);
    over.emplace_back("T_stop", buf);
    over.emplace_back("T_count", "1");
    return run_config(config_path, over, threads);
  }
  if (*figure) return run_figure(figure_index, figure_over.given(), threads);
  if (*measures) return run_measures(cov_path, direction);
  return 1;
}
