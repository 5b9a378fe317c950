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

#include <Eigen/Dense>

namespace gr2 {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

namespace tol {
inline constexpr double kSymmetry = 1e-12;
inline constexpr double kPhysical = 1e-10;
inline constexpr double kClamp = 1e-9;
}  // namespace tol

/// Covariance matrix of a zero-mean two-mode Gaussian state in the quadrature
/// ordering (x, p_x, y, p_y), with sigma_ij = <{R_i, R_j}>/2 and hbar = 1.
/// The vacuum of a unit-mass, unit-frequency oscillator pair is diag(1/2).
///
/// Block layout: [[A, C], [C^T, B]] with A, B the single-mode blocks.
class CovarianceMatrix {
 public:
  CovarianceMatrix() : m_(Mat4::Zero()) {}
  /// Symmetrizes the input; callers never observe an asymmetric matrix.
  explicit CovarianceMatrix(const Mat4& m) : m_(0.5 * (m + m.transpose())) {}

  static CovarianceMatrix vacuum() { return CovarianceMatrix(0.5 * Mat4::Identity()); }

  const Mat4& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Mat2 block_a() const { return m_.topLeftCorner<2, 2>(); }
  Mat2 block_b() const { return m_.bottomRightCorner<2, 2>(); }
  Mat2 block_c() const { return m_.topRightCorner<2, 2>(); }

 private:
  Mat4 m_;
};

struct SymplecticInvariants {
  double i1 = 0;  // 4 det A
  double i2 = 0;  // 4 det B
  double i3 = 0;  // 4 det C
  double i4 = 0;  // 16 det sigma
};

/// Dimensionless standard-form parameters; the vacuum is a = b = 1.
struct StandardFormParams {
  double a = 1;
  double b = 1;
  double c_plus = 0;
  double c_minus = 0;
};

struct PhysicalityReport {
  bool a_ok = false;
  bool b_ok = false;
  bool ordering_ok = false;  // c_plus >= |c_minus|
  bool determinant_ok = false;  // sigma > 0 and 16 det sigma >= 1
  double quartic = 0;
  double det16 = 0;  // (ab - c+^2)(ab - c-^2)
  bool physical = false;
};

/// (a^2-1)(b^2-1) - ab(c-^2 + c+^2) - 2 c- c+ + c-^2 c+^2
double uncertainty_quartic(const StandardFormParams& p) noexcept;

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& cov);

/// Inverts I1 = a^2, I2 = b^2, I3 = c+ c-, I4 = (ab - c+^2)(ab - c-^2).
/// Throws NonPhysicalInput when the invariants admit no real standard form.
StandardFormParams standard_form_from_invariants(const SymplecticInvariants& inv);

/// Standard form of cov computed directly: each single-mode block is
/// normalized to a multiple of the identity by a local symplectic map, and the
/// correlation block is then diagonalized by a signed SVD. Unlike the
/// invariant route this stays accurate when c+ ~ |c-| (pure or symmetric
/// states), where the quadratic for c+^2, c-^2 has a double root.
/// Throws NonPhysicalInput if a single-mode block is not positive definite.
StandardFormParams standard_form(const CovarianceMatrix& cov);

/// Returns (1/2) [[a,0,c+,0],[0,a,0,c-],[c+,0,b,0],[0,c-,0,b]].
CovarianceMatrix assemble_standard_form(const StandardFormParams& p);

/// Physical iff a, b >= 1, the uncertainty quartic is non-negative and sigma is
/// positive definite with 16 det sigma >= 1. The last condition rules out
/// states such as (1.1, 1, 0.6, -0.6) that pass the first two.
PhysicalityReport physicality_check(const StandardFormParams& p) noexcept;

/// Renyi-2 entropy in nats: (1/2) ln(4 det A) for one mode.
double renyi2_entropy(const Mat2& single_mode);
/// Renyi-2 entropy in nats: (1/2) ln(16 det sigma) for both modes.
double renyi2_entropy(const CovarianceMatrix& cov);

}  // namespace gr2
