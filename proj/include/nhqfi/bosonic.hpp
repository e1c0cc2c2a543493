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
 * Two coupled lossy bosonic modes restricted to the one-excitation
 * subspace, as an effective non-Hermitian 2x2 model.
 *
 * Basis ordering is fixed as (|0,1>, |1,0>). With gbar = (gamma_a+gamma_b)/2
 * and gamma = gamma_a - gamma_b the effective Hamiltonian is
 *
 *     H = (omega0 - i gbar/2) I + [[-i gamma/2, g], [g, +i gamma/2]],
 *
 * whose eigenvalues are omega0 - i gbar/2 +- xi with xi^2 = g^2 - gamma^2/4
 * and eigenvectors proportional to (-i gamma/2 +- xi, g). The model is valid
 * for xi^2 >= 0.
 */

#pragma once

#include "nhqfi/types.hpp"

namespace nhqfi {

struct BosonicParams {
  double omega0 = 1.0;   // common mode frequency
  double g = 1.0;        // beam-splitter coupling
  double gamma_a = 0.0;  // dissipation rate, mode a
  double gamma_b = 0.0;  // dissipation rate, mode b
};

/// xi^2 = g^2 - (gamma_a - gamma_b)^2 / 4.
double xi_squared(const BosonicParams& p);

/// Effective one-excitation Hamiltonian; throws kBrokenRegime for xi^2 < 0.
Matrix effective_hamiltonian(const BosonicParams& p);

/// Closed-form QFI for the initial state |0,1>:
/// 64 g^2 xi^4 / [-4g^2 + gamma^2 cos(2 xi theta) + 2 gamma xi sin(2 xi theta)]^2.
/// Equals 4 g^2 at theta = 0 and is constant when gamma_a = gamma_b.
/// Throws kZeroDenominator if the bracket vanishes within 1e-14.
double qfi_bosonic_closed(const BosonicParams& p, double theta);

}  // namespace nhqfi
