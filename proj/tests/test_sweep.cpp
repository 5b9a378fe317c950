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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gr2/dynamics.hpp"
#include "gr2/error.hpp"
#include "gr2/sweep.hpp"

using namespace gr2;

namespace {

template <class F>
Error error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected gr2::Error");
  return Error(ErrorCode::InternalConsistency, "unreachable");
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(rows, os);
  return os.str();
}

SweepConfig small_config() {
  SweepConfig cfg = figure_preset(2);
  cfg.t_grid = {0.0, 20.0, 21};
  cfg.temperature_grid = {0.0, 5.0, 6};
  return cfg;
}

}  // namespace

TEST_CASE("grid") {
  const Grid g{1.0, 2.0, 5};
  CHECK(g.at(0) == 1.0);
  CHECK(g.at(2) == 1.5);
  CHECK(g.at(4) == 2.0);
  const Grid uneven{0.0, 0.3, 7};
  CHECK(uneven.at(6) == 0.3);
  CHECK(Grid{3.0, 9.0, 1}.at(0) == 3.0);
}

TEST_CASE("parse_config") {
  SUBCASE("figure 1 text") {
    const auto cfg =
        parse_config("omega1 = 1\nomega2 = 2\nlambda = 0.1\nr = 0.23\nn1 = 0\nn2 = 0");
    const auto fig = figure_preset(1);
    CHECK(cfg.sys.mass == 1.0);
    CHECK(cfg.sys.omega1 == fig.sys.omega1);
    CHECK(cfg.sys.omega2 == fig.sys.omega2);
    CHECK(cfg.sys.lambda == fig.sys.lambda);
    CHECK(cfg.state.r == 0.23);
    CHECK(cfg.state.n1 == 0.0);
    CHECK(cfg.direction == Direction::A_given_B);
  }
  SUBCASE("defaults and overrides") {
    const auto cfg = parse_config("", {{"r", "0.5"}, {"direction", "B_given_A"}});
    CHECK(cfg.sys.mass == 1.0);
    CHECK(cfg.sys.lambda == 0.1);
    CHECK(cfg.state.r == 0.5);
    CHECK(cfg.direction == Direction::B_given_A);
    CHECK(cfg.output.empty());
  }
  SUBCASE("overrides win over file values") {
    const auto cfg = parse_config("lambda = 0.2\nt_count = 5\n", {{"lambda", "0.3"}});
    CHECK(cfg.sys.lambda == 0.3);
    CHECK(cfg.t_grid.count == 5);
  }
  SUBCASE("comments, blank lines and whitespace") {
    const auto cfg = parse_config(
        "# header\n\n  r=0.4   # trailing\n\toutput = out.csv\r\ndirection = B|A\n");
    CHECK(cfg.state.r == 0.4);
    CHECK(cfg.output == "out.csv");
    CHECK(cfg.direction == Direction::B_given_A);
  }
  SUBCASE("validation names the key") {
    const auto e = error_of([] { parse_config("lambda = -1"); });
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("lambda") != std::string::npos);
    CHECK(error_of([] { parse_config("t_count = 0"); }).code() == ErrorCode::ValidationError);
    CHECK(std::string(error_of([] { parse_config("T_start = 3\nT_stop = 1"); }).what())
              .find("T_stop") != std::string::npos);
    CHECK(error_of([] { parse_config("n2 = -0.5"); }).code() == ErrorCode::ValidationError);
    CHECK(error_of([] { parse_config("", {{"m", "0"}}); }).code() == ErrorCode::ValidationError);
  }
  SUBCASE("parse errors carry the line number") {
    const auto unknown = error_of([] { parse_config("r = 1\nfoo = 2\n"); });
    CHECK(unknown.code() == ErrorCode::ParseError);
    CHECK(std::string(unknown.what()).find("line 2") != std::string::npos);
    CHECK(std::string(unknown.what()).find("foo") != std::string::npos);

    const auto no_eq = error_of([] { parse_config("\n\nlambda 0.1"); });
    CHECK(std::string(no_eq.what()).find("line 3") != std::string::npos);
    CHECK(error_of([] { parse_config("r = abc"); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config("r = 1.0x"); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config("t_count = 2.5"); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config("r = "); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config(" = 1"); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config("direction = sideways"); }).code() == ErrorCode::ParseError);
    CHECK(error_of([] { parse_config("lambda = inf"); }).code() == ErrorCode::ParseError);
  }
}

TEST_CASE("figure presets") {
  const auto f1 = figure_preset(1);
  CHECK(f1.state.r == 0.23);
  CHECK(f1.state.n1 == 0.0);
  CHECK(f1.state.n2 == 0.0);
  for (int i : {2, 3, 4}) {
    const auto f = figure_preset(i);
    CHECK(f.state.r == 0.1);
    CHECK(f.state.n1 == 1.0);
    CHECK(f.state.n2 == 0.0);
  }
  const auto f5 = figure_preset(5);
  CHECK(f5.state.r == 3.0);
  CHECK(f5.state.n1 == 3.0);
  CHECK(f5.state.n2 == 1.0);
  for (int i = 1; i <= 5; ++i) {
    const auto f = figure_preset(i);
    CHECK(f.sys.lambda == 0.1);
    CHECK(f.sys.omega1 == 1.0);
    CHECK(f.sys.omega2 == 2.0);
    CHECK(f.sys.mass == 1.0);
    CHECK(f.t_grid.count == 101);
    CHECK(f.temperature_grid.count == 51);
    CHECK_NOTHROW(validate(f));
  }
  CHECK(error_of([] { figure_preset(6); }).code() == ErrorCode::UnknownFigure);
  CHECK(error_of([] { figure_preset(0); }).code() == ErrorCode::UnknownFigure);
}

TEST_CASE("run_sweep") {
  const SweepConfig cfg = small_config();
  const auto rows = run_sweep(cfg, 1);
  REQUIRE(rows.size() == 21u * 6u);

  SUBCASE("t-major order") {
    for (int i = 0; i < 21; ++i) {
      for (int j = 0; j < 6; ++j) {
        const auto& row = rows[static_cast<std::size_t>(6 * i + j)];
        CHECK(row.t == cfg.t_grid.at(i));
        CHECK(row.temperature == cfg.temperature_grid.at(j));
      }
    }
  }
  SUBCASE("figure 2 surface starts positive and decays") {
    for (int j = 0; j < 6; ++j) {
      const auto& first = rows[static_cast<std::size_t>(j)];
      const auto& last = rows[static_cast<std::size_t>(20 * 6 + j)];
      REQUIRE(first.measures);
      REQUIRE(last.measures);
      CHECK(first.measures->d2_discord > 0.0);
      CHECK(last.measures->d2_discord < first.measures->d2_discord);
    }
  }
  SUBCASE("physical rows satisfy the additivity identity") {
    for (const auto& row : rows) {
      REQUIRE(row.physical);
      const auto& m = *row.measures;
      CHECK(std::abs(m.i2_mutual - (m.j2_classical + m.d2_discord)) <= 1e-12);
    }
  }
  SUBCASE("thread count does not change the output") {
    const std::string serial = to_csv(rows);
    CHECK(to_csv(run_sweep(cfg, 4)) == serial);
    CHECK(to_csv(run_sweep(cfg, 0)) == serial);
  }
}

TEST_CASE("single-point sweep equals a direct evaluation") {
  SweepConfig cfg = figure_preset(2);
  cfg.t_grid = {7.5, 7.5, 1};
  cfg.temperature_grid = {1.25, 1.25, 1};
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  const auto direct = measures(
      evolve(squeezed_thermal_cov(cfg.state), cfg.sys, {1.25}, 7.5), cfg.direction);
  REQUIRE(rows[0].measures);
  CHECK(rows[0].measures->i2_mutual == direct.i2_mutual);
  CHECK(rows[0].measures->j2_classical == direct.j2_classical);
  CHECK(rows[0].measures->d2_discord == direct.d2_discord);
}

TEST_CASE("sweep to t = 10/lambda ends near zero") {
  SweepConfig cfg = figure_preset(2);
  cfg.t_grid = {0.0, 10.0 / cfg.sys.lambda, 11};
  cfg.temperature_grid = {0.0, 5.0, 6};
  const auto rows = run_sweep(cfg);
  const auto& m = *rows.back().measures;
  CHECK(m.i2_mutual <= 1e-3);
  CHECK(m.j2_classical <= 1e-3);
  CHECK(m.d2_discord <= 1e-3);
}

TEST_CASE("failed points become marked rows") {
  // Squeezing this strong exceeds double precision in the ab - c^2 structure.
  SweepConfig cfg = figure_preset(1);
  cfg.state.r = 20.0;
  cfg.t_grid = {0.0, 0.0, 1};
  cfg.temperature_grid = {0.0, 0.0, 1};
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].physical);
  CHECK_FALSE(rows[0].measures.has_value());
  CHECK_FALSE(rows[0].error.empty());
  const std::string csv = to_csv(rows);
  CHECK(csv.ends_with(",,,,,false\n"));
}

TEST_CASE("write_csv") {
  CHECK(to_csv({}) == std::string(kCsvHeader) + "\n");

  SweepRow vacuum;
  vacuum.standard_form = StandardFormParams{};
  vacuum.measures = measures(StandardFormParams{});
  vacuum.physical = true;
  CHECK(to_csv({vacuum}) == std::string(kCsvHeader) + "\n0,0,1,1,0,0,0,0,0,otherwise,true\n");

  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(123456789.123456789) == "123456789.123");
  CHECK(format_number(2.5e-7) == "2.5e-07");

  std::ostringstream broken;
  broken.setstate(std::ios::badbit);
  CHECK(error_of([&] { write_csv({vacuum}, broken); }).code() == ErrorCode::IoError);
  CHECK(error_of([&] { write_csv({vacuum}, std::string("/nonexistent-dir/x.csv")); }).code() ==
        ErrorCode::IoError);
}

TEST_CASE("covariance text input") {
  const auto cov = parse_covariance("0.5 0 0 0\n0 0.5 0 0\n# comment\n\n0 0 0.5 0\n0 0 0 0.5\n");
  CHECK(cov.matrix() == CovarianceMatrix::vacuum().matrix());
  CHECK(parse_covariance("1 2 3 4\n2 1 0 0\n3 0 1 0\n4 0 0 1")(0, 3) == 4.0);

  CHECK(error_of([] { parse_covariance("1 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_covariance("1 0 0 0\n0 1 0 0\n0 0 1 0"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_covariance("1 0 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_covariance("1 0 0 x\n0 1 0 0\n0 0 1 0\n0 0 0 1"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_covariance("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n1 1 1 1"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { read_covariance_file("/nonexistent/cov.txt"); }).code() == ErrorCode::IoError);
}
