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
}  // namespace

TEST_CASE("evolve: Hermitian generators conserve the norm") {
  Rng rng(201);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix h = random_hermitian(rng, 2, 2.0);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 4.0);
    REQUIRE(evolve(h, psi0, theta).k_theta == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("evolve: theta = 0 is the identity") {
  Rng rng(202);
  const Matrix h = random_matrix(rng, 2, 2.0);
  const Vector psi0 = random_state(rng, 2);
  const EvolvedState st = evolve(h, psi0, 0.0);
  REQUIRE((st.raw - psi0).norm() < 1e-14);
  REQUIRE(st.k_theta == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("evolve: K matches the eigen-superposition closed form") {
  // K / N^2 = 1 + m^2 + 2 m sin(alpha) cos(2 sqrt(nu0) theta + phi)
  const PtParams p{0.25, 1.0, kPi / 2.0};
  const double sin_alpha = p.r / p.s;
  const double nu0 = p.s * p.s - p.r * p.r;
  const Matrix h = build(p);
  for (double m : {1.0, -0.7, 1.4}) {
    for (double phi : {0.0, 0.9}) {
      const Vector psi0 = pt_state(p, m, phi);
      const double n2 = 1.0 / (1.0 + m * m + 2.0 * m * sin_alpha * std::cos(phi));
      for (double theta : {0.0, 0.7, 2.1, 5.5}) {
        const double want =
            n2 * (1.0 + m * m +
                  2.0 * m * sin_alpha *
                      std::cos(2.0 * std::sqrt(nu0) * theta + phi));
        REQUIRE(evolve(h, psi0, theta).k_theta ==
                Catch::Approx(want).margin(1e-12));
      }
    }
  }
}

TEST_CASE("evolve: normalized state has unit norm in every regime") {
  for (const PtParams& p : {PtParams{0.25, 1.0, kPi / 2.0},
                            PtParams{2.0, 2.0, kPi / 2.0},
                            PtParams{1.0, 0.25, kPi / 2.0}}) {
    const Matrix h = build(p);
    const Vector psi0 = pt_state(p, 1.0, 0.0);
    for (double theta : {0.0, 0.5, 2.0, 7.0}) {
      const EvolvedState st = evolve(h, psi0, theta);
      REQUIRE(std::abs(st.normalized.squaredNorm() - 1.0) < 1e-12);
      REQUIRE(std::abs(st.k_theta - st.raw.squaredNorm()) <=
              1e-12 * std::max(1.0, st.k_theta));
    }
  }
}

TEST_CASE("evolve: K is continuous in theta") {
  Rng rng(203);
  const Matrix h = random_matrix(rng, 2, 1.5);
  const Vector psi0 = random_state(rng, 2);
  const double lipschitz = 4.0 * max_abs(h) * 2.0 *
                           std::exp(2.0 * max_abs(h) * 2.0 * 3.0);
  for (double theta : {0.3, 1.1, 2.4}) {
    const double k0 = evolve(h, psi0, theta).k_theta;
    for (double step : {1e-4, 1e-5}) {
      const double k1 = evolve(h, psi0, theta + step).k_theta;
      REQUIRE(std::abs(k1 - k0) <= lipschitz * step);
    }
  }
}

TEST_CASE("evolve: rejects unnormalized input and annihilated states") {
  const Matrix h = Matrix::Zero(2, 2);
  Vector big(2);
  big << 2.0, 0.0;
  REQUIRE_THROWS_AS(evolve(h, big, 1.0), Error);

  // strong uniform loss wipes the state out: K = e^{-2 eta theta}
  Matrix lossy = Matrix::Zero(2, 2);
  lossy(0, 0) = Complex(0.0, -1.0);
  lossy(1, 1) = Complex(0.0, -1.0);
  Vector e0 = Vector::Zero(2);
  e0(0) = 1.0;
  try {
    evolve(lossy, e0, 400.0);
    FAIL("expected K_COLLAPSE");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::kCollapse);
  }
}

TEST_CASE("dk_dtheta: zero for Hermitian generators") {
  Rng rng(204);
  const Matrix h = random_hermitian(rng, 2, 2.0);
  const Vector psi0 = random_state(rng, 2);
  const EvolvedState st = evolve(h, psi0, 1.2);
  REQUIRE(std::abs(dk_dtheta(h, st)) < 1e-12);
}

TEST_CASE("dk_dtheta: pure gain 2 sqrt(nu1) on a broken-regime eigenstate") {
  const PtParams p{1.0, 0.25, kPi / 2.0};
  const double nu1 = p.r * p.r - p.s * p.s;
  const Matrix h = build(p);
  const Vector psi0 = eigensystem(p).state_plus;

  const EvolvedState st = evolve(h, psi0, 0.8);
  const double got = dk_dtheta(h, st);
  REQUIRE(got == Catch::Approx(2.0 * std::sqrt(nu1)).margin(1e-10));

  // independent route: central difference of log K
  const auto log_k = [&](double t) {
    return std::log(evolve(h, psi0, t).k_theta);
  };
  REQUIRE(got == Catch::Approx(central_diff(log_k, 0.8)).margin(1e-6));
}

TEST_CASE("dk_dtheta: matches the finite-difference oracle on random input") {
  Rng rng(205);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix h = random_matrix(rng, 2, 1.5);
    const Vector psi0 = random_state(rng, 2);
    const double theta = uniform(rng, 0.0, 2.5);
    const EvolvedState st = evolve(h, psi0, theta);

    const double k0 = st.k_theta;
    const double fd = (evolve(h, psi0, theta + 1e-6).k_theta -
                       evolve(h, psi0, theta - 1e-6).k_theta) /
                      (2e-6 * k0);
    REQUIRE(dk_dtheta(h, st) == Catch::Approx(fd).margin(1e-5));
  }
}

TEST_CASE("effective_k: identity rescaling reproduces K") {
  const PtParams p{0.25, 1.0, kPi / 2.0};
  const Matrix h = build(p);
  const Vector psi0 = pt_state(p, 1.0, 0.0);
  const auto one = [](double) { return Complex(1.0, 0.0); };
  for (double theta : {0.0, 0.9, 3.3}) {
    REQUIRE(effective_k(one, h, psi0, theta) ==
            Catch::Approx(evolve(h, psi0, theta).k_theta).margin(1e-14));
  }
}

TEST_CASE("effective_k: exponential damping on unitary evolution") {
  Rng rng(206);
  const Matrix h = random_hermitian(rng, 2, 1.5);
  const Vector psi0 = random_state(rng, 2);
  const auto damp = [](double t) { return Complex(std::exp(-t), 0.0); };
  for (double theta : {0.0, 0.4, 1.7}) {
    REQUIRE(effective_k(damp, h, psi0, theta) ==
            Catch::Approx(std::exp(-2.0 * theta)).margin(1e-10));
  }
}

TEST_CASE("effective_k: constant factor scales K quadratically") {
  const PtParams p{0.25, 1.0, kPi / 2.0};
  const Matrix h = build(p);
  const Vector psi0 = pt_state(p, 0.8, 0.4);
  const auto two = [](double) { return Complex(2.0, 0.0); };
  for (double theta : {0.3, 1.2}) {
    REQUIRE(effective_k(two, h, psi0, theta) ==
            Catch::Approx(4.0 * evolve(h, psi0, theta).k_theta).margin(1e-12));
  }
}
