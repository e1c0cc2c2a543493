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
 * The optimal-measurement condition |f> = iC|g> and error-propagation
 * variances. f and g are the deviation vectors of the generator and of the
 * measured observable on the normalized final state; a real C means the
 * measurement saturates the Cramer-Rao bound at that point.
 */

#pragma once

#include <utility>

#include "nhqfi/types.hpp"

namespace nhqfi {

struct ConditionReport {
  Vector f;
  Vector g;
  Complex c_estimate{0.0, 0.0};  // least-squares ratio f / (i g)
  double residual = 0.0;         // |f - i c g| / max(|f|, eps)
  bool satisfied = false;
};

/// f = (H - <H>)|phi_theta>, g = (A - <A>)|phi_theta>. A must be Hermitian
/// to 1e-12 (throws kNonHermitianMeasurement otherwise).
std::pair<Vector, Vector> deviation_vectors(const Matrix& h, const Matrix& a,
                                            const Vector& psi0, double theta);

/// Judges collinearity f = iC g by least-squares ratio plus relative
/// residual; `satisfied` additionally requires C real within tolerance.
/// Throws kDegenerate when both vectors vanish (condition vacuous).
ConditionReport check_condition(const Vector& f, const Vector& g,
                                double tol = 1e-8);

/// Estimation variance (Delta theta)^2 = (Delta A)^2 / (n |d_theta <A>|^2),
/// with the derivative evaluated through the exact expression
/// Q = i[(<H^dag A> - <A H>) - (<H^dag> - <H>)<A>].
/// Throws kZeroSignal when |Q| < 1e-12 (theta locally unidentifiable).
double error_propagation(const Matrix& h, const Matrix& a, const Vector& psi0,
                         double theta, int n = 1);

/// Normalized Cramer-Rao slack (Delta theta)^2 * F_theta - 1 at n = 1;
/// zero means the bound is saturated. Never below -1e-6.
double crb_gap(const Matrix& h, const Matrix& a, const Vector& psi0,
               double theta);

}  // namespace nhqfi
