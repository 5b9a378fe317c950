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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gr2/correlations.hpp"
#include "gr2/params.hpp"
#include "gr2/states.hpp"

namespace gr2 {

/// Uniform grid with inclusive endpoints; count == 1 means just the start.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double at(int i) const;
};

struct SweepConfig {
  SystemParams sys;
  SqueezedThermalParams state;
  Grid t_grid{0.0, 25.0, 101};
  Grid temperature_grid{0.0, 5.0, 51};
  Direction direction = Direction::A_given_B;
  std::string output;  // empty or "-" means standard output
};

/// Keys accepted in config files and as command-line overrides.
const std::vector<std::string_view>& config_keys();

/// Sets one key from its textual value. Throws ParseError for unknown keys
/// or malformed values; line > 0 is reported in the message.
void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value, int line = 0);

/// Throws ValidationError naming the first offending key.
void validate(const SweepConfig& cfg);

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Parses line-based "key = value" text ('#' starts a comment), then applies
/// the overrides in order and validates the result.
SweepConfig parse_config(std::string_view text, const Overrides& overrides = {});

/// Caption parameters of figures 1-5 on the default t x T grid.
SweepConfig figure_preset(int index);

struct SweepRow {
  double t = 0.0;
  double temperature = 0.0;
  std::optional<StandardFormParams> standard_form;
  std::optional<CorrelationMeasures> measures;  // empty when the point failed
  bool physical = false;
  std::string error;
};

/// Evaluates every (t, T) grid point; rows are t-major then T regardless of
/// how many worker threads run (0 picks the hardware concurrency). A failing
/// point yields a row with physical = false and no measures.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads = 0);

inline constexpr std::string_view kCsvHeader = "t,T,a,b,c_plus,c_minus,I2,J2,D2,branch,physical";

/// %.12g rendering with negative zero printed as 0.
std::string format_number(double value);

/// Writes the header and one LF-terminated line per row. Throws IoError if
/// the stream goes bad.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
/// Writes to a file, or to standard output when path is empty or "-".
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Reads four lines of four whitespace-separated numbers. Blank lines and
/// '#' comments are ignored.
CovarianceMatrix parse_covariance(std::string_view text);
CovarianceMatrix read_covariance_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace gr2
