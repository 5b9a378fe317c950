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

#include "gr2/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "gr2/error.hpp"

namespace gr2 {

namespace {

using Mat16 = Eigen::Matrix<double, 16, 16>;
using Vec16 = Eigen::Matrix<double, 16, 1>;

void require_time(double t) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    std::ostringstream os;
    os << "time must be finite and >= 0, got " << t;
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

Mat2 oscillator_propagator(double mass, double omega, double lambda, double t) {
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t) / omega;
  Mat2 block;
  block << c, s / mass, -mass * omega * omega * s, c;
  return std::exp(-lambda * t) * block;
}

Vec16 vectorize(const Mat4& m) { return Eigen::Map<const Vec16>(m.data()); }
Mat4 unvectorize(const Vec16& v) { return Eigen::Map<const Mat4>(v.data()); }

}  // namespace

DriftMatrix drift_matrix(const SystemParams& sys) {
  validate(sys);
  const double m = sys.mass;
  Mat4 y = Mat4::Zero();
  y.topLeftCorner<2, 2>() << -sys.lambda, 1.0 / m, -m * sys.omega1 * sys.omega1, -sys.lambda;
  y.bottomRightCorner<2, 2>() << -sys.lambda, 1.0 / m, -m * sys.omega2 * sys.omega2, -sys.lambda;
  return {y};
}

DiffusionMatrix diffusion_matrix(const SystemParams& sys, const BathParams& bath) {
  validate(sys);
  validate(bath);
  const double m = sys.mass;
  const double k1 = thermal_coth(sys.omega1, bath.temperature);
  const double k2 = thermal_coth(sys.omega2, bath.temperature);
  Mat4 d = Mat4::Zero();
  d(0, 0) = sys.lambda * k1 / (2.0 * m * sys.omega1);
  d(1, 1) = 0.5 * sys.lambda * m * sys.omega1 * k1;
  d(2, 2) = sys.lambda * k2 / (2.0 * m * sys.omega2);
  d(3, 3) = 0.5 * sys.lambda * m * sys.omega2 * k2;
  return {d};
}

Mat4 propagator(const SystemParams& sys, double t) {
  validate(sys);
  require_time(t);
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = oscillator_propagator(sys.mass, sys.omega1, sys.lambda, t);
  m.bottomRightCorner<2, 2>() = oscillator_propagator(sys.mass, sys.omega2, sys.lambda, t);
  return m;
}

CovarianceMatrix asymptotic_cov(const DriftMatrix& y, const DiffusionMatrix& d) {
  // Column-major vec: vec(Y S + S Y^T) = (I kron Y + Y kron I) vec(S).
  const Mat4& ym = y.matrix;
  const Mat4 id = Mat4::Identity();
  Mat16 op;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      op.block<4, 4>(4 * i, 4 * j) = id(i, j) * ym + ym(i, j) * id;
    }
  }
  const Vec16 rhs = -2.0 * vectorize(d.matrix);

  const Eigen::FullPivLU<Mat16> lu(op);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::SingularSystem,
                "stationary Lyapunov system is singular; the drift matrix must be Hurwitz");
  }
  Vec16 x = lu.solve(rhs);
  x += lu.solve(rhs - op * x);  // one refinement step

  const Mat4 sol = unvectorize(x);
  if (!sol.allFinite()) {
    throw Error(ErrorCode::SingularSystem, "stationary Lyapunov solution is not finite");
  }
  return CovarianceMatrix(sol);
}

CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const SystemParams& sys,
                        const BathParams& bath, double t) {
  require_time(t);
  if (t == 0.0) return sigma0;
  return Evolver(sigma0, sys, bath).at(t);
}

Evolver::Evolver(const CovarianceMatrix& sigma0, const SystemParams& sys, const BathParams& bath)
    : sys_(sys),
      sigma0_(sigma0),
      sigma_inf_(asymptotic_cov(drift_matrix(sys), diffusion_matrix(sys, bath))),
      gap_(sigma0.matrix() - sigma_inf_.matrix()) {}

CovarianceMatrix Evolver::at(double t) const {
  require_time(t);
  if (t == 0.0) return sigma0_;
  const Mat4 m = propagator(sys_, t);
  return CovarianceMatrix(m * gap_ * m.transpose() + sigma_inf_.matrix());
}

}  // namespace gr2
