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

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "gr2/gaussian.hpp"

namespace gr2::oracle {

/// Cofactor expansion along the first row.
inline double det_laplace(const Mat4& m) {
  auto det3 = [&](int skip_col) {
    int cols[3];
    for (int c = 0, k = 0; c < 4; ++c)
      if (c != skip_col) cols[k++] = c;
    const auto e = [&](int r, int c) { return m(r + 1, cols[c]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  };
  double det = 0.0;
  for (int c = 0; c < 4; ++c) det += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * det3(c);
  return det;
}

/// exp(A) by scaling and squaring of a truncated Taylor series.
inline Mat4 expm_series(const Mat4& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat4 scaled = a / std::ldexp(1.0, squarings);
  Mat4 term = Mat4::Identity();
  Mat4 sum = Mat4::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Right-hand side of dsigma/dt = Y sigma + sigma Y^T + 2D.
inline Mat4 moment_rhs(const Mat4& y, const Mat4& d, const Mat4& s) {
  return y * s + s * y.transpose() + 2.0 * d;
}

/// Adaptive RK4 with step doubling; local error per step below tol.
inline Mat4 integrate_rk4(const Mat4& y, const Mat4& d, Mat4 s, double t_end, double tol = 1e-12) {
  auto step = [&](const Mat4& s0, double h) {
    const Mat4 k1 = moment_rhs(y, d, s0);
    const Mat4 k2 = moment_rhs(y, d, s0 + 0.5 * h * k1);
    const Mat4 k3 = moment_rhs(y, d, s0 + 0.5 * h * k2);
    const Mat4 k4 = moment_rhs(y, d, s0 + h * k3);
    return Mat4(s0 + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  };
  double t = 0.0;
  double h = 1e-2;
  while (t < t_end) {
    h = std::min(h, t_end - t);
    const Mat4 full = step(s, h);
    const Mat4 half = step(step(s, 0.5 * h), 0.5 * h);
    const double err = (full - half).cwiseAbs().maxCoeff() / 15.0;
    if (err <= tol || h < 1e-8) {
      s = half + (half - full) / 15.0;
      t += h;
      h *= err > 0.0 ? std::min(2.0, 0.9 * std::pow(tol / err, 0.2)) : 2.0;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.2));
    }
  }
  return s;
}

/// Smallest eigenvalue of sigma + (i/2) Omega; a Gaussian covariance is
/// physical iff this is >= 0.
inline double uncertainty_min_eigenvalue(const Mat4& sigma) {
  using CMat4 = Eigen::Matrix<std::complex<double>, 4, 4>;
  CMat4 h = sigma.cast<std::complex<double>>();
  const std::complex<double> half_i(0.0, 0.5);
  for (int k = 0; k < 2; ++k) {
    h(2 * k, 2 * k + 1) += half_i;
    h(2 * k + 1, 2 * k) -= half_i;
  }
  return Eigen::SelfAdjointEigenSolver<CMat4>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

inline Mat4 standard_form_matrix(double a, double b, double cp, double cm) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = 0.5 * a;
  m(2, 2) = m(3, 3) = 0.5 * b;
  m(0, 2) = m(2, 0) = 0.5 * cp;
  m(1, 3) = m(3, 1) = 0.5 * cm;
  return m;
}

/// Draws standard-form parameters with c+ >= |c-| and accepts them only if
/// the uncertainty eigenvalue oracle says the state is physical (with margin).
inline StandardFormParams random_physical(std::mt19937_64& rng, double max_ab = 6.0) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    const double a = 1.0 + (max_ab - 1.0) * u01(rng);
    const double b = 1.0 + (max_ab - 1.0) * u01(rng);
    const double cp = std::sqrt(a * b) * u01(rng);
    const double cm = cp * (2.0 * u01(rng) - 1.0);
    if (uncertainty_min_eigenvalue(standard_form_matrix(a, b, cp, cm)) > 1e-9) {
      return {a, b, cp, cm};
    }
  }
}

/// Local symplectic operation: phase-space rotation by theta_a on mode A and
/// theta_b on mode B, then single-mode squeezing s_a, s_b.
inline Mat4 local_symplectic(double theta_a, double theta_b, double s_a = 0.0, double s_b = 0.0) {
  auto mode = [](double th, double s) {
    Mat2 rot;
    rot << std::cos(th), std::sin(th), -std::sin(th), std::cos(th);
    Mat2 sq = Mat2::Zero();
    sq(0, 0) = std::exp(s);
    sq(1, 1) = std::exp(-s);
    return Mat2(sq * rot);
  };
  Mat4 s = Mat4::Zero();
  s.topLeftCorner<2, 2>() = mode(theta_a, s_a);
  s.bottomRightCorner<2, 2>() = mode(theta_b, s_b);
  return s;
}

}  // namespace gr2::oracle
