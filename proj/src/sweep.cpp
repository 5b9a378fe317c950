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

#include "gr2/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gr2/dynamics.hpp"
#include "gr2/error.hpp"

namespace gr2 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ": ";
  os << what;
  throw Error(ErrorCode::ParseError, os.str());
}

double parse_double(std::string_view key, std::string_view text, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    parse_fail(line, "value '" + std::string(text) + "' for key '" + std::string(key) +
                         "' is not a finite number");
  }
  return value;
}

int parse_count(std::string_view key, std::string_view text, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    parse_fail(line, "value '" + std::string(text) + "' for key '" + std::string(key) +
                         "' is not an integer");
  }
  return value;
}

Direction parse_direction(std::string_view text, int line) {
  if (text == "A_given_B" || text == "A|B") return Direction::A_given_B;
  if (text == "B_given_A" || text == "B|A") return Direction::B_given_A;
  parse_fail(line, "direction must be A_given_B or B_given_A, got '" + std::string(text) + "'");
}

[[noreturn]] void invalid(std::string_view key, const std::string& what) {
  throw Error(ErrorCode::ValidationError, std::string(key) + ": " + what);
}

void require_positive(std::string_view key, double v) {
  if (!(v > 0.0)) invalid(key, "must be > 0");
}

void require_nonnegative(std::string_view key, double v) {
  if (!(v >= 0.0)) invalid(key, "must be >= 0");
}

void validate_grid(const Grid& g, std::string_view prefix) {
  const std::string p(prefix);
  require_nonnegative(p + "_start", g.start);
  if (g.count < 1) invalid(p + "_count", "must be >= 1");
  if (g.start > g.stop) invalid(p + "_stop", "must be >= " + p + "_start");
}

SweepRow evaluate_point(const Evolver& evolver, double t, double temperature,
                        Direction direction) {
  SweepRow row;
  row.t = t;
  row.temperature = temperature;
  try {
    const StandardFormParams sf = standard_form(evolver.at(t));
    row.standard_form = sf;
    row.measures = measures(sf, direction);
    row.physical = true;
  } catch (const Error& e) {
    row.measures.reset();
    row.physical = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

double Grid::at(int i) const {
  if (count <= 1 || i <= 0) return start;
  if (i >= count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "m",       "omega1", "omega2",  "lambda",  "r",       "n1",        "n2",     "t_start",
      "t_stop", "t_count", "T_start", "T_stop", "T_count", "direction", "output"};
  return keys;
}

void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value, int line) {
  value = trim(value);
  if (key == "direction") {
    cfg.direction = parse_direction(value, line);
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "t_count") {
    cfg.t_grid.count = parse_count(key, value, line);
  } else if (key == "T_count") {
    cfg.temperature_grid.count = parse_count(key, value, line);
  } else {
    double* target = nullptr;
    if (key == "m") target = &cfg.sys.mass;
    else if (key == "omega1") target = &cfg.sys.omega1;
    else if (key == "omega2") target = &cfg.sys.omega2;
    else if (key == "lambda") target = &cfg.sys.lambda;
    else if (key == "r") target = &cfg.state.r;
    else if (key == "n1") target = &cfg.state.n1;
    else if (key == "n2") target = &cfg.state.n2;
    else if (key == "t_start") target = &cfg.t_grid.start;
    else if (key == "t_stop") target = &cfg.t_grid.stop;
    else if (key == "T_start") target = &cfg.temperature_grid.start;
    else if (key == "T_stop") target = &cfg.temperature_grid.stop;
    else parse_fail(line, "unknown key '" + std::string(key) + "'");
    *target = parse_double(key, value, line);
  }
}

void validate(const SweepConfig& cfg) {
  require_positive("m", cfg.sys.mass);
  require_positive("omega1", cfg.sys.omega1);
  require_positive("omega2", cfg.sys.omega2);
  require_positive("lambda", cfg.sys.lambda);
  require_nonnegative("r", cfg.state.r);
  require_nonnegative("n1", cfg.state.n1);
  require_nonnegative("n2", cfg.state.n2);
  validate_grid(cfg.t_grid, "t");
  validate_grid(cfg.temperature_grid, "T");
}

SweepConfig parse_config(std::string_view text, const Overrides& overrides) {
  SweepConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(line_no, "missing key before '='");
    if (value.empty()) parse_fail(line_no, "missing value for key '" + std::string(key) + "'");
    apply_setting(cfg, key, value, line_no);
  }
  for (const auto& [key, value] : overrides) apply_setting(cfg, key, value);
  validate(cfg);
  return cfg;
}

SweepConfig figure_preset(int index) {
  SweepConfig cfg;
  cfg.sys = SystemParams{1.0, 1.0, 2.0, 0.1};
  switch (index) {
    case 1: cfg.state = {0.0, 0.0, 0.23}; break;
    case 2:
    case 3:
    case 4: cfg.state = {1.0, 0.0, 0.1}; break;
    case 5: cfg.state = {3.0, 1.0, 3.0}; break;
    default:
      throw Error(ErrorCode::UnknownFigure,
                  "figure index must be 1..5, got " + std::to_string(index));
  }
  return cfg;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads) {
  validate(cfg);
  const CovarianceMatrix sigma0 = squeezed_thermal_cov(cfg.state);

  const int n_t = cfg.t_grid.count;
  const int n_temp = cfg.temperature_grid.count;
  std::vector<Evolver> evolvers;
  evolvers.reserve(static_cast<std::size_t>(n_temp));
  for (int j = 0; j < n_temp; ++j) {
    evolvers.emplace_back(sigma0, cfg.sys, BathParams{cfg.temperature_grid.at(j)});
  }

  const std::size_t total = static_cast<std::size_t>(n_t) * static_cast<std::size_t>(n_temp);
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const int i = static_cast<int>(k / static_cast<std::size_t>(n_temp));
      const int j = static_cast<int>(k % static_cast<std::size_t>(n_temp));
      rows[k] = evaluate_point(evolvers[static_cast<std::size_t>(j)], cfg.t_grid.at(i),
                               cfg.temperature_grid.at(j), cfg.direction);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  return rows;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_number(row.t) << ',' << format_number(row.temperature) << ',';
    if (row.standard_form) {
      const StandardFormParams& sf = *row.standard_form;
      out << format_number(sf.a) << ',' << format_number(sf.b) << ','
          << format_number(sf.c_plus) << ',' << format_number(sf.c_minus) << ',';
    } else {
      out << ",,,,";
    }
    if (row.measures) {
      const CorrelationMeasures& m = *row.measures;
      out << format_number(m.i2_mutual) << ',' << format_number(m.j2_classical) << ','
          << format_number(m.d2_discord) << ',' << to_string(m.branch) << ',';
    } else {
      out << ",,,,";
    }
    out << (row.physical ? "true" : "false") << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing CSV output");
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (path.empty() || path == "-") {
    write_csv(rows, std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_csv(rows, file);
}

CovarianceMatrix parse_covariance(std::string_view text) {
  Mat4 m = Mat4::Zero();
  int row = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    if (row == 4) parse_fail(line_no, "covariance has more than 4 rows");

    std::istringstream fields(line);
    std::string token;
    int col = 0;
    while (fields >> token) {
      if (col == 4) parse_fail(line_no, "expected 4 numbers per row");
      m(row, col++) = parse_double("covariance", token, line_no);
    }
    if (col != 4) parse_fail(line_no, "expected 4 numbers per row");
    ++row;
  }
  if (row != 4) parse_fail(0, "covariance needs 4 rows, got " + std::to_string(row));
  return CovarianceMatrix(m);
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  if (file.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path + "'");
  return os.str();
}

CovarianceMatrix read_covariance_file(const std::string& path) {
  return parse_covariance(read_text_file(path));
}

}  // namespace gr2
