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

#include "gr2/gaussian.hpp"

#include <cmath>
#include <sstream>

#include "gr2/error.hpp"

namespace gr2 {

namespace {

double log_of_purity_argument(double det_arg, const char* what) {
  if (!(det_arg >= 1.0 - tol::kClamp)) {
    std::ostringstream os;
    os << what << " determinant argument " << det_arg << " is below the vacuum bound 1";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  return det_arg <= 1.0 ? 0.0 : 0.5 * std::log(det_arg);
}

// Symmetric symplectic S with S m S = sqrt(det m) 1, i.e. (det m)^{1/4} m^{-1/2}.
Mat2 normalizing_map(const Mat2& m, const char* which) {
  const double det = m.determinant();
  if (!(m(0, 0) > 0.0) || !(det > 0.0)) {
    std::ostringstream os;
    os << "single-mode block " << which << " is not positive definite (det = " << det << ")";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  const double root_det = std::sqrt(det);
  // sqrt(m) = (m + sqrt(det m) 1) / sqrt(tr m + 2 sqrt(det m)) for 2x2 SPD m.
  const Mat2 sqrt_m = (m + root_det * Mat2::Identity()) / std::sqrt(m.trace() + 2.0 * root_det);
  return std::sqrt(root_det) * sqrt_m.inverse();
}

}  // namespace

StandardFormParams standard_form(const CovarianceMatrix& cov) {
  const Mat2 a_blk = cov.block_a();
  const Mat2 b_blk = cov.block_b();
  const Mat2 s_a = normalizing_map(a_blk, "A");
  const Mat2 s_b = normalizing_map(b_blk, "B");
  const Mat2 c_norm = s_a * cov.block_c() * s_b;

  StandardFormParams p;
  p.a = 2.0 * std::sqrt(a_blk.determinant());
  p.b = 2.0 * std::sqrt(b_blk.determinant());
  const Eigen::Vector2d sv = Eigen::JacobiSVD<Mat2>(c_norm).singularValues();
  p.c_plus = 2.0 * sv(0);
  // Rotations on both sides have det +1, so the sign of det C survives in c-.
  p.c_minus = cov.block_c().determinant() < 0.0 ? -2.0 * sv(1) : 2.0 * sv(1);
  return p;
}

double uncertainty_quartic(const StandardFormParams& p) noexcept {
  const double cm2 = p.c_minus * p.c_minus;
  const double cp2 = p.c_plus * p.c_plus;
  return (p.a * p.a - 1.0) * (p.b * p.b - 1.0) - p.a * p.b * (cm2 + cp2) -
         2.0 * p.c_minus * p.c_plus + cm2 * cp2;
}

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& cov) {
  return {4.0 * cov.block_a().determinant(), 4.0 * cov.block_b().determinant(),
          4.0 * cov.block_c().determinant(), 16.0 * cov.matrix().determinant()};
}

StandardFormParams standard_form_from_invariants(const SymplecticInvariants& inv) {
  if (!(inv.i1 > 0.0) || !(inv.i2 > 0.0)) {
    std::ostringstream os;
    os << "local invariants must be positive (I1=" << inv.i1 << ", I2=" << inv.i2 << ")";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  StandardFormParams p;
  p.a = std::sqrt(inv.i1);
  p.b = std::sqrt(inv.i2);

  // c+^2 and c-^2 are the roots of t^2 - s t + I3^2.
  const double ab = p.a * p.b;
  double s = (inv.i1 * inv.i2 + inv.i3 * inv.i3 - inv.i4) / ab;
  if (s < -tol::kClamp) {
    std::ostringstream os;
    os << "c+^2 + c-^2 = " << s << " is negative";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  s = std::max(s, 0.0);
  double disc = s * s - 4.0 * inv.i3 * inv.i3;
  if (disc < -tol::kClamp) {
    std::ostringstream os;
    os << "standard-form discriminant " << disc << " is negative";
    throw Error(ErrorCode::NonPhysicalInput, os.str());
  }
  disc = std::max(disc, 0.0);

  const double u = 0.5 * (s + std::sqrt(disc));
  p.c_plus = std::sqrt(u);
  if (p.c_plus > 0.0) {
    // v = I3^2 / u avoids the cancellation in (s - sqrt(disc)) / 2.
    p.c_minus = inv.i3 / p.c_plus;
    if (std::abs(p.c_minus) > p.c_plus) p.c_minus = std::copysign(p.c_plus, p.c_minus);
  }
  return p;
}

CovarianceMatrix assemble_standard_form(const StandardFormParams& p) {
  if (p.a < 1.0 - tol::kPhysical || p.b < 1.0 - tol::kPhysical) {
    std::ostringstream os;
    os << "local parameters below vacuum (a=" << p.a << ", b=" << p.b << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  if (p.c_plus < std::abs(p.c_minus) - tol::kPhysical) {
    std::ostringstream os;
    os << "standard form requires c+ >= |c-| (c+=" << p.c_plus << ", c-=" << p.c_minus << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = p.a;
  m(2, 2) = m(3, 3) = p.b;
  m(0, 2) = m(2, 0) = p.c_plus;
  m(1, 3) = m(3, 1) = p.c_minus;
  return CovarianceMatrix(0.5 * m);
}

PhysicalityReport physicality_check(const StandardFormParams& p) noexcept {
  PhysicalityReport r;
  r.a_ok = p.a >= 1.0 - tol::kPhysical;
  r.b_ok = p.b >= 1.0 - tol::kPhysical;
  r.ordering_ok = p.c_plus >= std::abs(p.c_minus) - tol::kPhysical;
  const double ab = p.a * p.b;
  const double f_plus = ab - p.c_plus * p.c_plus;
  const double f_minus = ab - p.c_minus * p.c_minus;
  r.det16 = f_plus * f_minus;
  r.determinant_ok = f_plus > 0.0 && f_minus > 0.0 && r.det16 >= 1.0 - tol::kPhysical;
  r.quartic = uncertainty_quartic(p);
  r.physical = r.a_ok && r.b_ok && r.determinant_ok && r.quartic >= -tol::kPhysical;
  return r;
}

double renyi2_entropy(const Mat2& single_mode) {
  return log_of_purity_argument(4.0 * single_mode.determinant(), "single-mode");
}

double renyi2_entropy(const CovarianceMatrix& cov) {
  return log_of_purity_argument(16.0 * cov.matrix().determinant(), "two-mode");
}

}  // namespace gr2
