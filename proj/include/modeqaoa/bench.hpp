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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modeqaoa/baselines.hpp"
#include "modeqaoa/bo.hpp"
#include "modeqaoa/serialize.hpp"
#include "modeqaoa/stage2.hpp"

namespace modeqaoa {

/// Invalid configuration (maps to CLI exit code 1).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Experiment { single, qubit_sweep, depth_sweep, noise_sweep };
enum class Method { map_bo, exp_bo, exp_gd };

std::string to_string(Experiment e);
std::string to_string(Method m);
Experiment parse_experiment(const std::string& s);
Method parse_method(const std::string& s);

struct ExperimentConfig {
    Experiment experiment = Experiment::single;
    std::vector<int> n_values{10};
    std::vector<int> p_values{2};
    std::vector<double> noise_values{0.0};
    int degree = 3;
    int instances_per_point = 10;
    WeightScheme weights = WeightScheme::unit;
    std::vector<Method> methods{Method::map_bo, Method::exp_bo, Method::exp_gd};
    double threshold = 0.80;
    bool stage2 = false;

    AdaptiveConfig adaptive;
    BoSettings bo;
    std::int64_t fixed_shots = 1000;  // N_fix for the expectation baselines
    GdConfig gd;
    AmplifyConfig amplify;

    /// Sweep grid of the given experiment with every other setting at its default.
    static ExperimentConfig defaults_for(Experiment experiment);
    void validate() const;
};

/// Flat INI text listing every key, in a fixed order.
std::string config_to_ini(const ExperimentConfig& cfg);
/// Parses INI text; absent keys keep the defaults of the declared experiment.
/// Throws ConfigError on unknown keys or bad values.
ExperimentConfig config_from_ini(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Applies one "section.key=value" override.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);
/// FNV-1a hash of config_to_ini(cfg), as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

struct SweepPoint {
    int n = 0;
    int p = 0;
    double lambda = 0.0;
    std::string key;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg);

/// Graph for (master seed, n, index); shared by every p and lambda of a sweep.
MaxCutInstance make_instance(const ExperimentConfig& cfg, int n, int index, std::uint64_t master_seed);

/// Runs one method (plus Stage-2 when enabled) and returns its result.
RunResult run_method(Method method, const MaxCutInstance& instance, int depth, double noise_lambda,
                     const ExperimentConfig& cfg, std::uint64_t seed);

struct CellRecord {
    Json record;  // one JSONL line
    RunResult run;
};

struct ExperimentOutput {
    std::vector<CellRecord> cells;  // sorted by (sweep point, instance, method)
};

/// Every sweep point x instance x method. When `output_dir` is given writes
/// records.jsonl, aggregate.csv, config.ini and metadata.json there. The
/// result is independent of `jobs`.
ExperimentOutput run_experiment(const ExperimentConfig& cfg, std::uint64_t master_seed,
                                const std::optional<std::string>& output_dir = std::nullopt, int jobs = 1);

struct AggregateRow {
    std::string sweep_key;
    std::string method;
    std::string metric;
    double mean = 0.0;
    double std = 0.0;
    std::int64_t count = 0;
};

/// Mean and sample standard deviation per (sweep point, method, metric), in
/// first-appearance order of sweep points and methods.
std::vector<AggregateRow> aggregate(const std::vector<Json>& records);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

std::vector<Json> read_jsonl(const std::string& path);

/// Writes aggregate.csv and the per-figure CSVs into `dir` from records.jsonl there.
void emit_report(const std::string& dir);
/// Writes plot-ready CSVs for the given records into `dir`.
void emit_plot_data(const std::vector<Json>& records, const std::string& dir);

}  // namespace modeqaoa
