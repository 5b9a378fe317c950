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

#include "gr2/params.hpp"

#include <cmath>
#include <sstream>

#include "gr2/error.hpp"

namespace gr2 {

namespace {

void require_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    std::ostringstream os;
    os << name << " must be finite and > 0, got " << value;
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

}  // namespace

void validate(const SystemParams& sys) {
  require_positive(sys.mass, "mass");
  require_positive(sys.omega1, "omega1");
  require_positive(sys.omega2, "omega2");
  require_positive(sys.lambda, "lambda");
}

void validate(const BathParams& bath) {
  if (!(std::isfinite(bath.temperature) && bath.temperature >= 0.0)) {
    std::ostringstream os;
    os << "temperature must be finite and >= 0, got " << bath.temperature;
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

double thermal_coth(double omega, double temperature) {
  if (temperature == 0.0) return 1.0;
  // coth x = 1 + 2 / (e^{2x} - 1); stays finite for omega >> T.
  return 1.0 + 2.0 / std::expm1(omega / temperature);
}

}  // namespace gr2
