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
 * Core value types and the error vocabulary shared by every module.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nhqfi {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Largest matrix dimension the engine accepts. Every model shipped here is
/// effectively two-dimensional; the cap only guards against misuse.
inline constexpr Eigen::Index kMaxDim = 16;

enum class Errc {
  kInvalidArgument,          // precondition violated (dims, finiteness, ...)
  kRegimeMismatch,           // closed form evaluated outside its regime
  kCollapse,                 // K_COLLAPSE: evolved state annihilated
  kNonreal,                  // NONREAL: expectation acquired an imaginary part
  kSingularOutcome,          // SINGULAR_OUTCOME: Fisher information diverges
  kZeroSignal,               // ZERO_SIGNAL: d<A>/dtheta vanishes
  kDegenerate,               // DEGENERATE: collinearity condition is vacuous
  kEpCoalescence,            // EP_COALESCENCE: eigenvectors coalesced
  kNonHermitianMeasurement,  // NON_HERMITIAN_MEASUREMENT
  kBrokenRegime,             // BROKEN_REGIME: bosonic xi^2 < 0
  kZeroDenominator,          // ZERO_DENOMINATOR: closed-form bracket vanished
  kInternal,                 // internal consistency check failed
};

const char* errc_name(Errc code) noexcept;

/// Typed runtime error; sweeps route a subset of codes to gap markers.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

}  // namespace nhqfi
