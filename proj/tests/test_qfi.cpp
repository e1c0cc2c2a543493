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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nhqfi/evolution.hpp"
#include "nhqfi/linalg.hpp"
#include "nhqfi/pt_model.hpp"
#include "nhqfi/qfi.hpp"
#include "test_helpers.hpp"

using namespace nhqfi;
using namespace nhqfi::testing;

namespace {
constexpr double kPi = std::numbers::pi;

Vector pt_state(const PtParams& p, double m, double phi) {
  InitialStateSpec spec;
  spec.basis = StateBasis::kEigenAuto;
  spec.m = m;
  spec.phi = phi;
  return initial_state(p, spec);
}

double hermitian_variance4(const Matrix& h, const Vector& psi0) {
  const Vector hpsi = h * psi0;
  return 4.0 * (hpsi.squaredNorm() - std::norm(inner(psi0, hpsi)));
}
}  // namespace

TEST_CASE("qfi_expectation: Hermitian case is the theta-independent variance") {
  Rng rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(rng, 2, 2.0);
    const Vector psi0 = random_state(rng, 2);
    const double want = hermitian_variance4(h, psi0);
    for (double theta : {0.0, 0.8, 2.9}) {
      REQUIRE(qfi_expectation(h, psi0, theta).qfi ==
              Catch::Approx(want).margin(1e-8));
    }
  }
}

TEST_CASE("qfi_expectation: value 16 at the exceptional point") {
  const Matrix h = build({2.0, 2.0, kPi / 2.0});
  Vector e0 = Vector::Zero(2);
  e0(0) = 1.0;
  REQUIRE(qfi_expectation(h, e0, 0.0).qfi == Catch::Approx(16.0).margin(1e-12));
}

TEST_CASE("qfi_expectation: eigenstate input carries no information") {
  const PtParams p{0.25, 1.0, kPi / 2.0};
  const Vector psi0 = eigensystem(p).state_plus;
  for (double theta : {0.0, 1.0, 4.0}) {
    REQUIRE(qfi_expectation(build(p), psi0, theta).qfi < 1e-12);
  }
}

TEST_CASE("qfi_expectation: i_theta is exactly K times F") {
  Rng rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const QfiResult r = qfi_expectation(h, psi0, uniform(rng, 0.0, 3.0));
    REQUIRE(r.i_theta == r.k_theta * r.qfi);  // same floating evaluation
    REQUIRE(r.qfi >= 0.0);
  }
}

TEST_CASE("qfi_derivative: cross-route agreement on the PT model") {
  const PtParams p{0.25, 1.0, kPi / 2.0};
  const Matrix h = build(p);
  const Vector psi0 = pt_state(p, 1.0, 0.0);
  for (double theta : {0.0, 0.5, 1.0, 2.0}) {
    REQUIRE(qfi_derivative(h, psi0, theta) ==
            Catch::Approx(qfi_expectation(h, psi0, theta).qfi).margin(1e-5));
  }
}

TEST_CASE("qfi_derivative: Hermitian reduction") {
  Rng rng(303);
  const Matrix h = random_hermitian(rng, 2, 2.0);
  const Vector psi0 = random_state(rng, 2);
  REQUIRE(qfi_derivative(h, psi0, 1.1) ==
          Catch::Approx(hermitian_variance4(h, psi0)).margin(1e-5));
}

TEST_CASE("qfi_derivative: matches the broken-regime closed form") {
  const PtParams p{1.0, 0.25, kPi / 2.0};
  const Matrix h = build(p);
  const Vector psi0 = pt_state(p, -1.0, 0.0);
  for (double theta : {0.1, 0.6, 1.4}) {
    REQUIRE(qfi_derivative(h, psi0, theta) ==
            Catch::Approx(qfi_closed_broken(p, -1.0, 0.0, theta)).margin(1e-5));
  }
}

TEST_CASE("sld: vanishes for a Hermitian generator on its eigenstate") {
  Matrix h(2, 2);
  h << 1.0, 0.0, 0.0, -1.0;
  Vector e0 = Vector::Zero(2);
  e0(0) = 1.0;
  REQUIRE(max_abs(sld(h, e0, 0.7)) < 1e-14);
}

TEST_CASE("sld: Hermitian, satisfies the defining equation, reproduces QFI") {
  Rng rng(304);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 3.0);

    const Matrix l = sld(h, psi0, theta);
    REQUIRE(max_abs(Matrix(l - l.adjoint())) < 1e-12);

    // (L rho + rho L)/2 = d_theta rho, the derivative by central differences
    const Vector phi = evolve(h, psi0, theta).normalized;
    const Matrix rho = phi * phi.adjoint();
    const double h_fd = 1e-6;
    const Vector pp = evolve(h, psi0, theta + h_fd).normalized;
    const Vector pm = evolve(h, psi0, theta - h_fd).normalized;
    const Matrix drho = (pp * pp.adjoint() - pm * pm.adjoint()) / (2.0 * h_fd);
    REQUIRE(max_abs(Matrix(0.5 * (l * rho + rho * l) - drho)) < 1e-6);

    // Tr[rho L^2] equals the variance expression
    const double trace = inner(phi, l * (l * phi)).real();
    REQUIRE(trace ==
            Catch::Approx(qfi_expectation(h, psi0, theta).qfi).margin(1e-8));
  }
}

TEST_CASE("sld_alternative: c = 0 degenerates to the SLD") {
  Rng rng(305);
  const Matrix h = random_matrix(rng, 2, 1.5);
  const Vector psi0 = random_state(rng, 2);
  const Matrix m = random_matrix(rng, 2, 1.5);
  REQUIRE(max_abs(Matrix(sld_alternative(h, psi0, 0.9, m, 0.0) -
                         sld(h, psi0, 0.9))) == 0.0);
}

TEST_CASE("sld_alternative: family members solve the same defining equation") {
  Rng rng(306);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const Matrix m = random_matrix(rng, 2, 1.5);
    const double theta = uniform(rng, 0.1, 2.5);

    const Matrix lp = sld_alternative(h, psi0, theta, m, 1.0);
    const Vector phi = evolve(h, psi0, theta).normalized;
    const Matrix rho = phi * phi.adjoint();
    const double h_fd = 1e-6;
    const Vector pp = evolve(h, psi0, theta + h_fd).normalized;
    const Vector pm = evolve(h, psi0, theta - h_fd).normalized;
    const Matrix drho = (pp * pp.adjoint() - pm * pm.adjoint()) / (2.0 * h_fd);
    REQUIRE(max_abs(Matrix(0.5 * (lp * rho + rho * lp) - drho)) < 1e-6);

    // the added term has zero action on |phi>, so the trace is unchanged
    const double trace = inner(phi, lp * (lp * phi)).real();
    const double qfi = qfi_expectation(h, psi0, theta).qfi;
    REQUIRE(trace >= qfi - 1e-8);
    REQUIRE(trace == Catch::Approx(qfi).margin(1e-8));
  }
}

TEST_CASE("Povm: construction validates the elements") {
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  REQUIRE_NOTHROW(Povm({p0, p1}));
  REQUIRE_THROWS_AS(Povm({p0}), Error);  // does not sum to identity
  Matrix skew = p0;
  skew(0, 1) = Complex(0.0, 0.5);
  REQUIRE_THROWS_AS(Povm({skew, p1}), Error);  // not Hermitian
  Matrix neg = -0.5 * Matrix::Identity(2, 2);
  Matrix comp = 1.5 * Matrix::Identity(2, 2);
  REQUIRE_THROWS_AS(Povm({neg, comp}), Error);  // not positive semidefinite
}

TEST_CASE("classical_fisher: the trivial measurement carries no information") {
  Rng rng(307);
  const Matrix h = random_matrix(rng, 2, 1.5);
  const Vector psi0 = random_state(rng, 2);
  const Povm trivial({Matrix::Identity(2, 2)});
  REQUIRE(classical_fisher(h, psi0, 1.0, trivial) < 1e-12);
}

TEST_CASE("classical_fisher: SLD eigenbasis attains the QFI") {
  Rng rng(308);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 3.0);
    const Povm povm = eigenprojector_povm(sld(h, psi0, theta));
    REQUIRE(classical_fisher(h, psi0, theta, povm) ==
            Catch::Approx(qfi_expectation(h, psi0, theta).qfi).margin(1e-5));
  }
}

TEST_CASE("classical_fisher: computational basis saturates the optimal setup") {
  const PtParams p{0.25, 0.5, kPi / 2.0};
  const Matrix h = build(p);
  const Vector psi0 = pt_state(p, 1.0, 0.0);
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const Povm basis({p0, p1});
  for (int i = 1; i <= 12; ++i) {
    const double theta = 0.5 * i;
    REQUIRE(classical_fisher(h, psi0, theta, basis) ==
            Catch::Approx(qfi_expectation(h, psi0, theta).qfi).margin(1e-5));
  }
}

TEST_CASE("classical_fisher: measurement information never exceeds the QFI") {
  Rng rng(309);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 3.0);
    const Povm povm = eigenprojector_povm(random_hermitian(rng, 2, 1.0));
    REQUIRE(classical_fisher(h, psi0, theta, povm) <=
            qfi_expectation(h, psi0, theta).qfi + 1e-6);
  }
}

TEST_CASE("route agreement on 100 random non-Hermitian instances") {
  Rng rng(310);
  double worst_deriv = 0.0, worst_trace = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix h = random_matrix(rng, 2, 2.0);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 3.0);
    const double f = qfi_expectation(h, psi0, theta).qfi;
    worst_deriv =
        std::max(worst_deriv, std::abs(f - qfi_derivative(h, psi0, theta)));
    const Vector phi = evolve(h, psi0, theta).normalized;
    const Matrix l = sld(h, psi0, theta);
    worst_trace =
        std::max(worst_trace, std::abs(f - inner(phi, l * (l * phi)).real()));
  }
  REQUIRE(worst_deriv < 1e-5);
  REQUIRE(worst_trace < 1e-8);
}
