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
 * Quantum Fisher information for pure states under non-unitary evolution,
 * via three routes that must agree:
 *
 *   - the generator-variance expression on the normalized final state,
 *     F = 4(<H^dag H> - <H^dag><H>)                       (production path)
 *   - the state-derivative expression,
 *     F = 4(<d phi|d phi> - |<d phi|phi>|^2)              (finite differences)
 *   - the symmetric logarithmic derivative, F = Tr[rho L^2]
 *
 * plus the classical Fisher information of an arbitrary POVM, which the
 * quantum value bounds from above.
 */

#pragma once

#include <vector>

#include "nhqfi/evolution.hpp"
#include "nhqfi/types.hpp"

namespace nhqfi {

struct QfiResult {
  double theta = 0.0;
  double qfi = 0.0;      // F_theta >= 0 (values in [-1e-10, 0) clamp to 0)
  double i_theta = 0.0;  // K_theta * F_theta, the resource-adjusted information
  double k_theta = 0.0;
};

/// F = 4(<H^dag H> - <H^dag><H>) on the normalized final state.
QfiResult qfi_expectation(const Matrix& h, const Vector& psi0, double theta);

/// Derivative route, with |d phi> by central differences (step 1e-6).
/// Serves as an oracle for qfi_expectation; never the production path.
double qfi_derivative(const Matrix& h, const Vector& psi0, double theta);

/// Symmetric logarithmic derivative of the pure-state model,
/// L = -2i [dH |phi><phi| - |phi><phi| dH^dag] with dH = H - <H>.
/// Hermitian by construction; satisfies (L rho + rho L)/2 = d_theta rho.
Matrix sld(const Matrix& h, const Vector& psi0, double theta);

/// Member of the non-unique SLD family L' = L + c * dM |phi><phi| dM^dag.
/// The added term annihilates |phi>, so L' solves the same defining
/// equation and leaves Tr[rho L'^2] unchanged.
Matrix sld_alternative(const Matrix& h, const Vector& psi0, double theta,
                       const Matrix& m, double c);

/// Positive operator-valued measure. Validity (Hermitian elements, positive
/// semidefinite, summing to the identity) is checked once at construction.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> elements);

  const std::vector<Matrix>& elements() const { return elements_; }
  Eigen::Index dim() const { return elements_.front().rows(); }

 private:
  std::vector<Matrix> elements_;
};

/// POVM whose elements project onto the eigenvectors of a Hermitian matrix.
Povm eigenprojector_povm(const Matrix& hermitian);

/// Classical Fisher information sum_x (d_theta p_x)^2 / p_x with outcome
/// probabilities p_x = <phi|Pi_x|phi> and central-difference derivatives.
/// An outcome with p_x < 1e-12 contributes 0 if |d_theta p_x| < 1e-9 and
/// throws kSingularOutcome otherwise.
double classical_fisher(const Matrix& h, const Vector& psi0, double theta,
                        const Povm& povm);

}  // namespace nhqfi
