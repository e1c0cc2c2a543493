// Copyright 2026 The nhqfi authors
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

/**
 * @file
 * Non-unitary state evolution under a (generally non-Hermitian) generator,
 * with explicit normalization bookkeeping. theta is both the estimated
 * parameter and the evolution time of U_theta = exp(-i H theta).
 */

#pragma once

#include <functional>

#include "nhqfi/types.hpp"

namespace nhqfi {

/// Evolution output: the raw state, its squared norm K_theta and the
/// renormalized state. Invariants: k_theta = |raw|^2 > 0 and
/// |normalized| = 1, both to 1e-12.
struct EvolvedState {
  double theta = 0.0;
  Vector raw;         // U_theta |psi0>
  double k_theta = 0.0;
  Vector normalized;  // raw / sqrt(k_theta)
};

/// Evolves a normalized initial state. Throws kCollapse when the norm drops
/// below 1e-300 (the state was annihilated; theta is unusable there).
EvolvedState evolve(const Matrix& h, const Vector& psi0, double theta);

/// Logarithmic derivative of the normalization coefficient,
/// (d_theta K)/K = i(<H^dag> - <H>) on the normalized state. The result is
/// real up to roundoff; an imaginary residue above 1e-8 throws kNonreal.
double dk_dtheta(const Matrix& h, const EvolvedState& state);

/// Normalization coefficient of the effective implementation
/// U'_theta = f(theta) U_theta, i.e. |f(theta)|^2 * K_theta.
double effective_k(const std::function<Complex(double)>& f_of_theta,
                   const Matrix& h, const Vector& psi0, double theta);

}  // namespace nhqfi
