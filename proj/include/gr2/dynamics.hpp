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

/// Drift matrix Y of dsigma/dt = Y sigma + sigma Y^T + 2D. Block diagonal,
/// each block [[-lambda, 1/m], [-m omega_k^2, -lambda]].
struct DriftMatrix {
  Mat4 matrix;
};

/// Diffusion matrix D; diagonal for a thermal bath.
struct DiffusionMatrix {
  Mat4 matrix;
};

DriftMatrix drift_matrix(const SystemParams& sys);

/// Thermal diffusion coefficients: m omega D_xx = D_pp / (m omega) = (lambda/2) coth(omega/2T)
/// per mode, all cross coefficients zero.
DiffusionMatrix diffusion_matrix(const SystemParams& sys, const BathParams& bath);

/// M(t) = exp(Y t), evaluated in closed form per 2x2 block:
/// e^{-lambda t} [cos(omega t) 1 + sin(omega t)/omega K].
Mat4 propagator(const SystemParams& sys, double t);

/// Solves Y s + s Y^T = -2D for the stationary covariance by Gaussian
/// elimination on the vectorized 16x16 system. Throws SingularSystem when Y
/// admits no unique stationary solution.
CovarianceMatrix asymptotic_cov(const DriftMatrix& y, const DiffusionMatrix& d);

/// sigma(t) = M(t) [sigma(0) - sigma(inf)] M(t)^T + sigma(inf).
CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const SystemParams& sys,
                        const BathParams& bath, double t);

/// Caches the stationary covariance for a fixed (system, bath) pair so that
/// many time points can be evaluated without re-solving the Lyapunov system.
class Evolver {
 public:
  Evolver(const CovarianceMatrix& sigma0, const SystemParams& sys, const BathParams& bath);

  CovarianceMatrix at(double t) const;
  const CovarianceMatrix& initial() const noexcept { return sigma0_; }
  const CovarianceMatrix& stationary() const noexcept { return sigma_inf_; }

 private:
  SystemParams sys_;
  CovarianceMatrix sigma0_;
  CovarianceMatrix sigma_inf_;
  Mat4 gap_;
};

}  // namespace gr2
