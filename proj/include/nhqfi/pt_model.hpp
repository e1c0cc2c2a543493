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
 * The two-level PT-symmetric model
 *
 *     H_s = [[ r e^{i w},  s ],
 *            [ s,  r e^{-i w} ]],    s > 0, r and w real.
 *
 * Eigenvalues are mu +- sqrt(nu0) with mu = r cos w and
 * nu0 = s^2 - r^2 sin^2 w; the symmetry is unbroken for nu0 > 0, broken for
 * nu0 < 0 (eigenvalues mu +- i sqrt(nu1), nu1 = -nu0) and defective at the
 * exceptional point nu0 = 0. This header carries the closed-form Fisher
 * information of the model in both regimes, the input-optimized (channel)
 * value, the estimation variance of the |0><0| measurement, the sensor
 * expectation and the Hermitian-comparison ratios.
 */

#pragma once

#include "nhqfi/types.hpp"

namespace nhqfi {

struct PtParams {
  double r = 0.25;
  double s = 1.0;
  double omega = 1.5707963267948966;  // pi/2
};

enum class Regime { kUnbroken, kExceptionalPoint, kBroken };

const char* regime_name(Regime tag) noexcept;

struct PtRegime {
  Regime tag = Regime::kUnbroken;
  double mu = 0.0;  // r cos w
  double nu = 0.0;  // |s^2 - r^2 sin^2 w| (0 at the EP)
};

struct PtEigensystem {
  Complex value_plus;
  Complex value_minus;
  Vector state_plus;   // normalized, generally non-orthogonal pair
  Vector state_minus;
};

/// How an initial state is specified for this model.
enum class StateBasis {
  kEigenAuto,      // eigenbasis of the current regime; |0> exactly at the EP
  kEigenUnbroken,
  kEigenBroken,
  kExplicit,
};

struct InitialStateSpec {
  StateBasis basis = StateBasis::kEigenAuto;
  double m = 1.0;
  double phi = 0.0;
  Vector explicit_vector;  // used by kExplicit; normalized on construction
};

Matrix build(const PtParams& p);

/// Regime classification with a relative tolerance on s^2 - r^2 sin^2 w.
PtRegime classify(const PtParams& p, double ep_tol = 1e-10);

/// Normalized eigenpairs. Overlaps: <l+|l-> = (r/s) sin w when unbroken,
/// <e+|e-> = s/|r sin w| when broken. Throws kEpCoalescence at the EP.
PtEigensystem eigensystem(const PtParams& p);

/// Normalized state N(|v+> + m e^{i phi} |v->) in the regime eigenbasis,
/// or the supplied explicit vector. N accounts for the non-orthogonality
/// of the eigenvectors.
Vector initial_state(const PtParams& p, const InitialStateSpec& spec);

/// Unbroken-regime closed form
/// F = 16 m^2 nu0^2 / [(1+m^2)s + 2 m r sin(w) cos(2 sqrt(nu0) theta + phi)]^2.
double qfi_closed_unbroken(const PtParams& p, double m, double phi,
                           double theta);

/// Broken-regime closed form
/// F = 16 m^2 nu1^2 E^2 / [A(E^2 + m^2) + 2 m s E cos(phi)]^2,
/// E = e^{2 sqrt(nu1) theta}, A = |r sin w|.
double qfi_closed_broken(const PtParams& p, double m, double phi,
                         double theta);

struct ChannelQfi {
  double value = 0.0;
  bool at_ep = false;  // the input-optimized value drops to zero exactly there
};

/// Input-optimized QFI, 4(s + |r sin w|)^2 in both regimes; 0 at the EP.
ChannelQfi channel_qfi(const PtParams& p);

struct ChannelQfiSearch {
  double value = 0.0;
  double m = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

/// Deterministic numeric maximization of the generic-engine QFI over
/// (m, phi, theta): 64^3 grid with m in [-3,3] (|m| >= 1e-3),
/// phi in [0,2pi), theta in [0, 4pi/sqrt(nu)], then one golden-section
/// refinement pass per coordinate. Cross-checks channel_qfi.
ChannelQfiSearch channel_qfi_numeric(const PtParams& p);

/// QFI exactly at the exceptional point, evaluated through the
/// defective-limit exponential. Zero for inputs proportional to the
/// coalesced eigenvector, finite and generally nonzero otherwise.
double qfi_at_ep(const PtParams& p, const Vector& psi0, double theta);

/// Estimation variance of the measurement |0><0| for the eigen-superposition
/// state (m, phi) at w = pi/2, as a closed form in
/// kappa = r/s, gamma0 = sqrt(nu0) theta + phi/2 and the angle beta with
/// sin(beta) = kappa, cos(beta) = -sqrt(1-kappa^2):
///
///   p = [1+m^2+2m sin(2g0+b)] [1+m^2-2m sin(2g0-b)] [1+m^2+2m k cos(2g0)]^2
///   q = 16 m^2 nu0 (1-k^2) [(1+m^2) cos(2g0) + 2 m k]^2
///
/// Throws kZeroSignal when q = 0.
double variance_pq(const PtParams& p, double m, double phi, double theta);

/// Sensor reading <X>_theta for X = |0><0| on the m=1, phi=0 state:
/// [1 - sin(2 theta sqrt(nu0) - alpha)] / [2 + 2 sin(alpha) cos(2 theta sqrt(nu0))].
double sensor_expectation(const PtParams& p, double theta);

struct HermitianRatios {
  double s0 = 0.0;  // F / (4 nu0), against the equal-spectrum Hermitian model
  double s1 = 0.0;  // F / (4 r^2), against the equal-H^dag-H Hermitian model
};

/// Ratios of the unbroken closed form to the two Hermitian baselines
/// (w = pi/2, kappa = r/s in (0,1)). Maxima over theta reach
/// (1+kappa)/(1-kappa) and (1+kappa)^2/kappa^2 respectively.
HermitianRatios hermitian_ratios(const PtParams& p, double m, double phi,
                                 double theta);

}  // namespace nhqfi
