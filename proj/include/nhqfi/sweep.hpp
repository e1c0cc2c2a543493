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
 * Declarative parameter sweeps: a SweepSpec names a model, a quantity and a
 * grid; run_sweep evaluates it into a deterministic table. Points where the
 * requested quantity is singular (ZERO_SIGNAL, SINGULAR_OUTCOME, ...) become
 * gap rows tagged with the error code instead of being interpolated over.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhqfi/bosonic.hpp"
#include "nhqfi/pt_model.hpp"
#include "nhqfi/types.hpp"

namespace nhqfi {

enum class Model { kPt, kBosonic, kCustomMatrix };

enum class Quantity {
  kQfi,
  kITheta,
  kKTheta,
  kChannelQfi,
  kVariance,
  kCrbGap,
  kSensor,
  kRatios,
  kConditionResidual,
};

struct GridSpec {
  std::string variable = "theta";  // theta or a model parameter name
  double min = 0.0;
  double max = 1.0;
  int steps = 2;  // >= 2, endpoints distinct
};

struct SweepSpec {
  Model model = Model::kPt;
  Quantity quantity = Quantity::kQfi;
  GridSpec grid;
  PtParams pt;
  BosonicParams bosonic;
  InitialStateSpec initial_state;
  std::optional<Matrix> measurement;    // defaults to |0><0| where needed
  std::optional<Matrix> custom_matrix;  // required by kCustomMatrix
  double theta = 0.0;                   // fixed theta for parameter grids
  double tol = 1e-8;                    // tolerance for condition checks
  std::string preset;                   // provenance, kept in metadata
};

struct SweepRow {
  double grid = 0.0;
  std::vector<double> values;  // empty on a gap row
  std::string status;          // "ok", "ep", or an error code
};

struct SweepResult {
  std::vector<std::string> columns;  // grid column first
  std::vector<SweepRow> rows;
  nlohmann::ordered_json metadata;   // resolved spec + tool version
};

/// Named figure recipes (fig1a, fig1a-broken, fig1b, fig2a, fig2b,
/// fig3a..fig3d, fig5a..fig5c, fig6a, fig6b, fig7a, fig7b).
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

nlohmann::ordered_json spec_to_json(const SweepSpec& spec);
SweepSpec spec_from_json(const nlohmann::json& j);

/// Evaluates the spec. Deterministic: identical specs produce identical
/// tables. Spec-level problems throw Error(kInvalidArgument, ...) with a
/// field-level message.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV with a header row, 12 significant digits, gap marker "NA" and a
/// trailing status column. Metadata rides in leading '#' comment lines.
std::string to_csv(const SweepResult& result);

/// JSON document: {"metadata": ..., "columns": [...], "rows": [...]}.
std::string to_json(const SweepResult& result);

}  // namespace nhqfi
