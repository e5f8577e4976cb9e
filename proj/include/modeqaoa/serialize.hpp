// Copyright 2026 The modeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "modeqaoa/graph.hpp"
#include "modeqaoa/resources.hpp"
#include "modeqaoa/run_result.hpp"
#include "modeqaoa/simulator.hpp"

namespace modeqaoa {

using Json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u, v, w], ...], "seed": int?, "optimum": {...}?}
Json to_json(const MaxCutInstance& instance);
MaxCutInstance instance_from_json(const Json& j);

MaxCutInstance load_instance(const std::string& path);
void save_instance(const MaxCutInstance& instance, const std::string& path);

Json to_json(const QaoaParams& params);
/// Keys: mode, mode_cut, confidence, var_norm, expectation, distinct, shots.
Json to_json(const EvalStats& stats);
/// Keys: t, theta, y, shots, accepted, conf, var_norm, incumbent, mode, mode_cut.
Json to_json(const Trial& trial);
Json to_json(const ResourceLedger& ledger);
Json to_json(const MetricsReport& report);
Json to_json(const OutcomeDistribution& dist);
/// Full run including the trial list and the ledger.
Json to_json(const RunResult& run);

}  // namespace modeqaoa
