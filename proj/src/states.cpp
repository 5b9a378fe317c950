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

#include "gr2/states.hpp"

#include <cmath>
#include <sstream>

#include "gr2/error.hpp"

namespace gr2 {

CovarianceMatrix squeezed_thermal_cov(const SqueezedThermalParams& p) {
  if (!(p.n1 >= 0.0) || !(p.n2 >= 0.0) || !(p.r >= 0.0) || !std::isfinite(p.n1 + p.n2 + p.r)) {
    std::ostringstream os;
    os << "squeezed thermal parameters must be finite and >= 0 (n1=" << p.n1 << ", n2=" << p.n2
       << ", r=" << p.r << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  const double ch = std::cosh(p.r);
  const double sh = std::sinh(p.r);
  const double half_ch2 = 0.5 * std::cosh(2.0 * p.r);
  const double a_s = p.n1 * ch * ch + p.n2 * sh * sh + half_ch2;
  const double b_s = p.n1 * sh * sh + p.n2 * ch * ch + half_ch2;
  const double c_s = 0.5 * (p.n1 + p.n2 + 1.0) * std::sinh(2.0 * p.r);

  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = a_s;
  m(2, 2) = m(3, 3) = b_s;
  m(0, 2) = m(2, 0) = c_s;
  m(1, 3) = m(3, 1) = -c_s;
  return CovarianceMatrix(m);
}

double separability_threshold(double n1, double n2) {
  if (!(n1 >= 0.0) || !(n2 >= 0.0)) {
    std::ostringstream os;
    os << "thermal occupations must be >= 0 (n1=" << n1 << ", n2=" << n2 << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  const double cosh2 = (n1 + 1.0) * (n2 + 1.0) / (n1 + n2 + 1.0);
  return std::acosh(std::sqrt(cosh2));
}

CovarianceMatrix gibbs_cov(const SystemParams& sys, const BathParams& bath) {
  validate(sys);
  validate(bath);
  const double m = sys.mass;
  const double k1 = thermal_coth(sys.omega1, bath.temperature);
  const double k2 = thermal_coth(sys.omega2, bath.temperature);
  Mat4 s = Mat4::Zero();
  s(0, 0) = k1 / (2.0 * m * sys.omega1);
  s(1, 1) = 0.5 * m * sys.omega1 * k1;
  s(2, 2) = k2 / (2.0 * m * sys.omega2);
  s(3, 3) = 0.5 * m * sys.omega2 * k2;
  return CovarianceMatrix(s);
}

}  // namespace gr2
