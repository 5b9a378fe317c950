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
#include "gr2/params.hpp"

namespace gr2 {

/// Two-mode squeezed thermal state: thermal occupations n1, n2 and squeezing r.
struct SqueezedThermalParams {
  double n1 = 0.0;
  double n2 = 0.0;
  double r = 0.0;
};

/// Covariance with sigma_xx = sigma_pxpx = a_s, sigma_yy = sigma_pypy = b_s,
/// sigma_xy = c_s and sigma_pxpy = -c_s, where
///   a_s = n1 cosh^2 r + n2 sinh^2 r + cosh(2r)/2
///   b_s = n1 sinh^2 r + n2 cosh^2 r + cosh(2r)/2
///   c_s = (n1 + n2 + 1) sinh(2r)/2.
CovarianceMatrix squeezed_thermal_cov(const SqueezedThermalParams& p);

/// Squeezing above which the squeezed thermal state is entangled:
/// cosh^2 r_s = (n1 + 1)(n2 + 1) / (n1 + n2 + 1).
double separability_threshold(double n1, double n2);

/// Product of the two single-oscillator thermal states at temperature T.
CovarianceMatrix gibbs_cov(const SystemParams& sys, const BathParams& bath);

}  // namespace gr2
