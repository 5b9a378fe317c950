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

namespace gr2 {

/// Mechanical constants of the two oscillators and the dissipation rate
/// (hbar = k = 1). All strictly positive.
struct SystemParams {
  double mass = 1.0;
  double omega1 = 1.0;
  double omega2 = 2.0;
  double lambda = 0.1;
};

/// Bath temperature in energy units; T = 0 is the exact zero-temperature limit.
struct BathParams {
  double temperature = 0.0;
};

/// Throws InvalidParams unless every field is finite and strictly positive.
void validate(const SystemParams& sys);
/// Throws InvalidParams unless the temperature is finite and non-negative.
void validate(const BathParams& bath);

/// coth(omega / 2T), with the T = 0 value taken as the exact limit 1.
double thermal_coth(double omega, double temperature);

}  // namespace gr2
