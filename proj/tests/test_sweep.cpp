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

#include "nhqfi/qfi.hpp"
#include "nhqfi/sweep.hpp"

using namespace nhqfi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("run_sweep: fig1a reproduces the oscillatory curve with max 6.25") {
  const SweepResult res = run_sweep(preset("fig1a"));
  REQUIRE(res.rows.size() == 701);
  REQUIRE(res.columns == std::vector<std::string>{"theta", "qfi"});
  double best = 0.0;
  for (const SweepRow& row : res.rows) {
    REQUIRE(row.status == "ok");
    best = std::max(best, row.values.at(0));
  }
  REQUIRE(best == Catch::Approx(6.25).margin(1e-6));
  // oscillation: the curve dips back to its floor 4 nu0^2/(s+r)^2 = 2.25
  double worst_min = 1e300;
  for (const SweepRow& row : res.rows) {
    worst_min = std::min(worst_min, row.values.at(0));
  }
  REQUIRE(worst_min == Catch::Approx(2.25).margin(1e-6));
}

TEST_CASE("run_sweep: fig2a jumps to 16 exactly at the EP") {
  const SweepResult res = run_sweep(preset("fig2a"));
  double at_ep = -1.0;
  double near_ep_max = 0.0;
  for (const SweepRow& row : res.rows) {
    if (row.status == "ep") {
      at_ep = row.values.at(0);
      continue;
    }
    REQUIRE(row.status == "ok");
    if (std::abs(row.grid - 2.0) < 1e-3 * 2.0) {
      near_ep_max = std::max(near_ep_max, row.values.at(0));
    }
  }
  REQUIRE(at_ep == Catch::Approx(16.0).margin(1e-9));
  REQUIRE(near_ep_max <= 1e-3);
}

TEST_CASE("run_sweep: channel-QFI sweep drops to zero only at the EP") {
  const SweepResult res = run_sweep(preset("fig2b"));
  for (const SweepRow& row : res.rows) {
    const double want = 4.0 * std::pow(row.grid + 2.0, 2);
    if (row.status == "ep") {
      REQUIRE(row.values.at(0) == 0.0);
    } else {
      REQUIRE(row.values.at(0) == Catch::Approx(want).margin(1e-9));
    }
  }
}

TEST_CASE("run_sweep: variance rows match the module call (reproducibility)") {
  SweepSpec spec = preset("fig3b");
  spec.grid.steps = 41;
  spec.grid.max = 4.0;
  const SweepResult res = run_sweep(spec);
  REQUIRE(res.columns ==
          std::vector<std::string>{"theta", "variance", "inv_qfi"});
  int gaps = 0;
  for (const SweepRow& row : res.rows) {
    if (row.status != "ok") {
      REQUIRE(row.values.empty());
      REQUIRE(row.status == "ZERO_SIGNAL");
      ++gaps;
      continue;
    }
    const double direct = variance_pq(spec.pt, 1.1, 0.0, row.grid);
    REQUIRE(row.values.at(0) == Catch::Approx(direct).epsilon(1e-6));
  }
  REQUIRE(res.rows.size() == 41);
  REQUIRE(gaps < 5);
}

TEST_CASE("run_sweep: degenerate grids and bad specs are rejected") {
  SweepSpec spec = preset("fig1a");
  spec.grid.steps = 1;
  REQUIRE_THROWS_AS(run_sweep(spec), Error);
  spec.grid.steps = 2;
  spec.grid.max = spec.grid.min;  // equal endpoints
  REQUIRE_THROWS_AS(run_sweep(spec), Error);
  spec = preset("fig1a");
  spec.grid.variable = "bogus";
  REQUIRE_THROWS_AS(run_sweep(spec), Error);
  spec = preset("fig1a");
  spec.model = Model::kCustomMatrix;  // no matrix supplied
  REQUIRE_THROWS_AS(run_sweep(spec), Error);
  spec = preset("fig6a");
  spec.model = Model::kBosonic;  // sensor is a pt-only quantity
  REQUIRE_THROWS_AS(run_sweep(spec), Error);
}

TEST_CASE("run_sweep: custom matrix model evaluates the plain engine") {
  SweepSpec spec;
  spec.model = Model::kCustomMatrix;
  spec.quantity = Quantity::kQfi;
  spec.grid = {"theta", 0.0, 2.0, 21};
  Matrix m(2, 2);
  m << Complex(0.0, 0.3), Complex(1.0, 0.0), Complex(1.0, 0.0),
      Complex(0.0, -0.3);
  spec.custom_matrix = m;
  spec.initial_state.basis = StateBasis::kExplicit;
  spec.initial_state.explicit_vector = Vector(2);
  spec.initial_state.explicit_vector << 1.0, 0.0;
  const SweepResult res = run_sweep(spec);
  for (const SweepRow& row : res.rows) {
    Vector psi0(2);
    psi0 << 1.0, 0.0;
    REQUIRE(row.values.at(0) ==
            Catch::Approx(qfi_expectation(m, psi0, row.grid).qfi)
                .margin(1e-12));
  }
}

TEST_CASE("to_csv: deterministic output with NA gap markers") {
  SweepSpec spec = preset("fig3c");
  spec.grid.steps = 25;
  spec.grid.max = 4.0;
  const std::string a = to_csv(run_sweep(spec));
  const std::string b = to_csv(run_sweep(spec));
  REQUIRE(a == b);  // byte-identical
  REQUIRE(a.find("theta,variance,inv_qfi,status") != std::string::npos);
  REQUIRE(a.find("# nhqfi") != std::string::npos);

  // the identity carries no signal: every row becomes a tagged gap
  spec.measurement = Matrix::Identity(2, 2);
  const std::string gaps = to_csv(run_sweep(spec));
  REQUIRE(gaps.find("NA,NA,ZERO_SIGNAL") != std::string::npos);
}

TEST_CASE("to_json: records carry nulls on gap rows and full metadata") {
  SweepSpec spec = preset("fig3c");
  spec.grid.steps = 25;
  spec.grid.max = 4.0;
  spec.measurement = Matrix::Identity(2, 2);  // forces ZERO_SIGNAL rows
  const SweepResult res = run_sweep(spec);
  const nlohmann::json doc = nlohmann::json::parse(to_json(res));
  REQUIRE(doc.at("metadata").at("tool") == "nhqfi");
  REQUIRE(doc.at("metadata").at("spec").at("quantity") == "variance");
  REQUIRE(doc.at("rows").size() == 25);
  for (const auto& row : doc.at("rows")) {
    REQUIRE(row.at("status") == "ZERO_SIGNAL");
    REQUIRE(row.at("variance").is_null());
    REQUIRE(row.at("inv_qfi").is_null());
  }
}

TEST_CASE("spec json round trip preserves every field") {
  SweepSpec spec = preset("fig2a");
  spec.tol = 3e-9;
  spec.theta = 0.25;
  const SweepSpec back = spec_from_json(spec_to_json(spec));
  REQUIRE(spec_to_json(back) == spec_to_json(spec));
}

TEST_CASE("presets: all names resolve and run") {
  for (const std::string& name : preset_names()) {
    SweepSpec spec = preset(name);
    spec.grid.steps = 5;  // keep the smoke test fast
    const SweepResult res = run_sweep(spec);
    REQUIRE(res.rows.size() == 5);
    REQUIRE(res.metadata.at("spec").at("preset") == name);
  }
  REQUIRE_THROWS_AS(preset("fig99"), Error);
}
