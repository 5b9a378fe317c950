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

#include "gr2/correlations.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "gr2/error.hpp"

namespace gr2 {

namespace {

constexpr double kDegenerateB = 1e-9;

// Measures below -kPhysical indicate a formula or input bug rather than
// round-off.
double clamp_nonnegative(double value, const char* name, bool* clamped) {
  if (value >= 0.0) return value;
  if (value >= -tol::kPhysical) {
    if (clamped != nullptr) *clamped = true;
    return 0.0;
  }
  std::ostringstream os;
  os << name << " = " << value << " is negative for a state assumed physical";
  throw Error(ErrorCode::InternalConsistency, os.str());
}

double log_det16(const StandardFormParams& p) {
  const double ab = p.a * p.b;
  const double det16 = (ab - p.c_plus * p.c_plus) * (ab - p.c_minus * p.c_minus);
  if (!(det16 > 0.0)) {
    std::ostringstream os;
    os << "16 det sigma = " << det16 << " is not positive";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  return std::log(det16);
}

double raw_discord(const StandardFormParams& p, double eps2) {
  return std::log(p.b) - 0.5 * log_det16(p) + 0.5 * std::log(eps2);
}

double raw_classical(const StandardFormParams& p, double eps2) {
  return std::log(p.a) - 0.5 * std::log(eps2);
}

double raw_mutual(const StandardFormParams& p) {
  return std::log(p.a) + std::log(p.b) - 0.5 * log_det16(p);
}

}  // namespace

const char* to_string(Branch b) noexcept {
  return b == Branch::ConditionNegative ? "condition_negative" : "otherwise";
}

const char* to_string(Direction d) noexcept {
  return d == Direction::A_given_B ? "A_given_B" : "B_given_A";
}

Epsilon2 epsilon2(const StandardFormParams& p) {
  const double a = p.a;
  const double b = p.b;
  const double cp2 = p.c_plus * p.c_plus;
  const double cm2 = p.c_minus * p.c_minus;

  const double lhs = a * b * b * cm2 - cp2 * (a + b * cm2);
  const double rhs = a * b * b * cp2 - cm2 * (a + b * cp2);
  if (lhs * rhs < 0.0) {
    return {a * (a - cp2 / b), Branch::ConditionNegative};
  }

  if (b <= 1.0 + kDegenerateB) {
    if (std::abs(p.c_plus) > kDegenerateB || std::abs(p.c_minus) > kDegenerateB) {
      std::ostringstream os;
      os << "b = " << b << " is at the vacuum bound while correlations c+ = " << p.c_plus
         << ", c- = " << p.c_minus << " persist";
      throw Error(ErrorCode::DegenerateB, os.str());
    }
    return {a * a, Branch::Otherwise};
  }

  // (b - 1)(b + 1) is exact in its first factor, unlike b*b - 1 near b = 1.
  const double b2m1 = (b - 1.0) * (b + 1.0);
  const double f_minus = a * b2m1 - b * cm2;
  const double f_plus = a * b2m1 - b * cp2;
  const double prod = f_minus * f_plus;
  const double root = std::sqrt(std::max(prod, 0.0));
  const double numer = 2.0 * std::abs(p.c_minus * p.c_plus) * root + prod + cm2 * cp2;
  return {numer / (b2m1 * b2m1), Branch::Otherwise};
}

double gr2_discord(const StandardFormParams& p) {
  return clamp_nonnegative(raw_discord(p, epsilon2(p).value), "D2", nullptr);
}

double gr2_classical(const StandardFormParams& p) {
  return clamp_nonnegative(raw_classical(p, epsilon2(p).value), "J2", nullptr);
}

double gr2_mutual_information(const StandardFormParams& p) {
  return clamp_nonnegative(raw_mutual(p), "I2", nullptr);
}

CorrelationMeasures measures(const StandardFormParams& p, Direction direction) {
  CorrelationMeasures m;
  m.direction = direction;
  m.standard_form = p;
  if (direction == Direction::B_given_A) std::swap(m.standard_form.a, m.standard_form.b);
  m.physicality = physicality_check(m.standard_form);
  if (!m.physicality.physical) {
    std::ostringstream os;
    os << "state is not physical (a=" << m.standard_form.a << ", b=" << m.standard_form.b
       << ", c+=" << m.standard_form.c_plus << ", c-=" << m.standard_form.c_minus
       << ", quartic=" << m.physicality.quartic << ", 16 det sigma=" << m.physicality.det16
       << ")";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }

  const StandardFormParams& sf = m.standard_form;
  const Epsilon2 eps = epsilon2(sf);
  m.epsilon2 = eps.value;
  m.branch = eps.branch;
  m.i2_mutual = clamp_nonnegative(raw_mutual(sf), "I2", &m.clamped);
  m.j2_classical = clamp_nonnegative(raw_classical(sf, eps.value), "J2", &m.clamped);
  m.d2_discord = clamp_nonnegative(raw_discord(sf, eps.value), "D2", &m.clamped);
  return m;
}

CorrelationMeasures measures(const CovarianceMatrix& cov, Direction direction) {
  return measures(standard_form(cov), direction);
}

}  // namespace gr2
