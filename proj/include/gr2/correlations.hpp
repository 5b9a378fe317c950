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

#include "gr2/gaussian.hpp"

namespace gr2 {

/// Which closed form produced the minimal conditional determinant.
enum class Branch { ConditionNegative, Otherwise };

/// A_given_B measures mode B (the default); B_given_A measures mode A.
enum class Direction { A_given_B, B_given_A };

const char* to_string(Branch b) noexcept;
const char* to_string(Direction d) noexcept;

struct Epsilon2 {
  double value = 0;
  Branch branch = Branch::Otherwise;
};

/// Gaussian Renyi-2 correlations of a two-mode state, all in nats.
struct CorrelationMeasures {
  double i2_mutual = 0;
  double j2_classical = 0;
  double d2_discord = 0;
  double epsilon2 = 0;
  Branch branch = Branch::Otherwise;
  Direction direction = Direction::A_given_B;
  StandardFormParams standard_form;  // as oriented for the measurement direction
  PhysicalityReport physicality;
  bool clamped = false;  // a value in [-1e-10, 0) was reset to 0
};

/// Infimum of det(conditional covariance) of A over Gaussian measurements on
/// B, in units where the vacuum gives 1. The first closed form applies when
///   (a b^2 c-^2 - c+^2 (a + b c-^2)) (a b^2 c+^2 - c-^2 (a + b c+^2)) < 0,
/// the second otherwise (including equality).
Epsilon2 epsilon2(const StandardFormParams& p);

/// D2 = ln b - (1/2) ln[(ab - c+^2)(ab - c-^2)] + (1/2) ln eps2.
double gr2_discord(const StandardFormParams& p);
/// J2 = ln a - (1/2) ln eps2.
double gr2_classical(const StandardFormParams& p);
/// I2 = ln a + ln b - (1/2) ln[(ab - c+^2)(ab - c-^2)].
double gr2_mutual_information(const StandardFormParams& p);

/// Recovers the standard form of cov, orients it for the requested
/// measurement direction and evaluates all three measures. Throws
/// NonPhysicalInput when the recovered state fails the physicality check.
CorrelationMeasures measures(const CovarianceMatrix& cov,
                             Direction direction = Direction::A_given_B);

/// Same as measures() for parameters already in standard form (a belongs to
/// the unmeasured mode).
CorrelationMeasures measures(const StandardFormParams& p,
                             Direction direction = Direction::A_given_B);

}  // namespace gr2
