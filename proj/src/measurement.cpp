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

#include "nhqfi/measurement.hpp"

#include <cmath>

#include "nhqfi/evolution.hpp"
#include "nhqfi/linalg.hpp"
#include "nhqfi/qfi.hpp"

namespace nhqfi {

namespace {

constexpr double kVectorEps = 1e-12;

void require_hermitian(const Matrix& a, const char* who) {
  detail::require_square(a, who);
  if (max_abs(Matrix(a - a.adjoint())) > 1e-12) {
    fail(Errc::kNonHermitianMeasurement,
         std::string(who) + ": observable must be Hermitian");
  }
}

}  // namespace

std::pair<Vector, Vector> deviation_vectors(const Matrix& h, const Matrix& a,
                                            const Vector& psi0, double theta) {
  require_hermitian(a, "deviation_vectors");
  if (a.rows() != h.rows()) {
    fail(Errc::kInvalidArgument, "deviation_vectors: dimension mismatch");
  }
  const Vector phi = evolve(h, psi0, theta).normalized;
  const Complex e_h = inner(phi, h * phi);
  const Complex e_a = inner(phi, a * phi);
  Vector f = h * phi - e_h * phi;
  Vector g = a * phi - e_a * phi;
  return {std::move(f), std::move(g)};
}

ConditionReport check_condition(const Vector& f, const Vector& g, double tol) {
  if (f.size() != g.size()) {
    fail(Errc::kInvalidArgument, "check_condition: dimension mismatch");
  }
  if (!(tol > 0.0)) {
    fail(Errc::kInvalidArgument, "check_condition: tol must be positive");
  }
  const double nf = f.norm();
  const double ng = g.norm();
  if (nf < kVectorEps && ng < kVectorEps) {
    fail(Errc::kDegenerate, "check_condition: both deviation vectors vanish");
  }

  ConditionReport rep;
  rep.f = f;
  rep.g = g;
  if (ng > kVectorEps) {
    rep.c_estimate = inner(g, f) / (Complex(0.0, 1.0) * inner(g, g));
  }
  const Vector resid = f - Complex(0.0, 1.0) * rep.c_estimate * g;
  rep.residual = resid.norm() / std::max(nf, kVectorEps);

  const double c_abs = std::abs(rep.c_estimate);
  const bool c_real = std::abs(rep.c_estimate.imag()) <= tol * c_abs;
  rep.satisfied = rep.residual <= tol && c_real;
  return rep;
}

double error_propagation(const Matrix& h, const Matrix& a, const Vector& psi0,
                         double theta, int n) {
  require_hermitian(a, "error_propagation");
  if (n < 1) fail(Errc::kInvalidArgument, "error_propagation: n must be >= 1");
  const Vector phi = evolve(h, psi0, theta).normalized;

  const Vector aphi = a * phi;
  const double e_a = inner(phi, aphi).real();
  const double e_a2 = aphi.squaredNorm();  // <A^2> for Hermitian A
  const double var_a = e_a2 - e_a * e_a;

  // d<A>/dtheta without finite differences:
  // Q = i[(<H^dag A> - <A H>) - (<H^dag> - <H>)<A>].
  const Complex e_hda = inner(h * phi, aphi);
  const Complex e_ah = inner(aphi, h * phi);
  const Complex e_hd = inner(phi, adjoint(h) * phi);
  const Complex e_h = inner(phi, h * phi);
  const Complex q = Complex(0.0, 1.0) * ((e_hda - e_ah) - (e_hd - e_h) * e_a);

  const double q_abs = std::abs(q);
  if (q_abs < 1e-12) {
    fail(Errc::kZeroSignal, "error_propagation: d<A>/dtheta vanishes");
  }
  return var_a / (static_cast<double>(n) * q_abs * q_abs);
}

double crb_gap(const Matrix& h, const Matrix& a, const Vector& psi0,
               double theta) {
  const double var = error_propagation(h, a, psi0, theta, 1);
  return var * qfi_expectation(h, psi0, theta).qfi - 1.0;
}

}  // namespace nhqfi
