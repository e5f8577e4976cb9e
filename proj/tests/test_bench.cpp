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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "modeqaoa/bench.hpp"

namespace modeqaoa {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("modeqaoa_test_" + name);
    fs::remove_all(d);
    return d;
}

// Small but complete configuration that runs in well under a second.
ExperimentConfig tiny(Experiment e) {
    ExperimentConfig c = ExperimentConfig::defaults_for(e);
    c.instances_per_point = 2;
    c.bo.max_trials = 12;
    c.bo.final_shots = 500;
    c.fixed_shots = 200;
    c.gd.iterations = 3;
    c.adaptive.bootstrap_resamples = 50;
    return c;
}

TEST(BenchConfig, DefaultsPerExperiment) {
    EXPECT_EQ(ExperimentConfig::defaults_for(Experiment::qubit_sweep).n_values, (std::vector<int>{3, 4, 6, 8, 10, 12}));
    EXPECT_EQ(ExperimentConfig::defaults_for(Experiment::depth_sweep).p_values, (std::vector<int>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(ExperimentConfig::defaults_for(Experiment::noise_sweep).noise_values.size(), 6U);
    EXPECT_EQ(ExperimentConfig::defaults_for(Experiment::noise_sweep).noise_values.back(), 0.01);
    EXPECT_EQ(ExperimentConfig{}.instances_per_point, 10);
}

TEST(BenchConfig, IniRoundTrip) {
    ExperimentConfig c = ExperimentConfig::defaults_for(Experiment::noise_sweep);
    c.adaptive.tau_var = 0.035;
    c.bo.stagnation.reset();
    c.methods = {Method::exp_gd, Method::map_bo};
    c.weights = WeightScheme::uniform;
    const std::string ini = config_to_ini(c);
    const ExperimentConfig back = config_from_ini(ini);
    EXPECT_EQ(config_to_ini(back), ini);
    EXPECT_EQ(config_hash(back), config_hash(c));
    EXPECT_FALSE(back.bo.stagnation.has_value());
    EXPECT_EQ(back.adaptive.tau_var, 0.035);
    EXPECT_EQ(config_hash(c).size(), 16U);
}

TEST(BenchConfig, Errors) {
    EXPECT_THROW(config_from_ini("[adaptive]\nbogus = 1\n"), ConfigError);
    EXPECT_THROW(config_from_ini("[adaptive]\ngrowth = fast\n"), ConfigError);
    EXPECT_THROW(config_from_ini("[adaptive]\ngrowth = 0.5\n"), ConfigError);
    EXPECT_THROW(config_from_ini("[experiment]\ntype = galaxy\n"), ConfigError);
    EXPECT_THROW(config_from_ini("[experiment]\ninstances_per_point = 0\n"), ConfigError);
    EXPECT_THROW(config_from_ini("[experiment]\nn_values = 3,40\n"), ConfigError);
    ExperimentConfig c;
    EXPECT_THROW(apply_override(c, "budget.max_trials"), ConfigError);
    EXPECT_THROW(apply_override(c, "budget.nope=3"), ConfigError);
    apply_override(c, "budget.max_trials=7");
    EXPECT_EQ(c.bo.max_trials, 7);
    apply_override(c, "experiment.type=depth_sweep");
    EXPECT_EQ(c.p_values.size(), 6U);
}

TEST(BenchConfig, PartialIniKeepsDefaults) {
    const ExperimentConfig c = config_from_ini("[experiment]\ntype = qubit_sweep\n[budget]\nmax_trials = 33\n");
    EXPECT_EQ(c.experiment, Experiment::qubit_sweep);
    EXPECT_EQ(c.n_values.size(), 6U);
    EXPECT_EQ(c.bo.max_trials, 33);
    EXPECT_EQ(c.adaptive.max_shots, 1200);
}

TEST(BenchSweep, PointsAndKeys) {
    const auto q = sweep_points(ExperimentConfig::defaults_for(Experiment::qubit_sweep));
    ASSERT_EQ(q.size(), 6U);
    EXPECT_EQ(q[0].key, "n=3");
    EXPECT_EQ(q[0].p, 2);
    const auto l = sweep_points(ExperimentConfig::defaults_for(Experiment::noise_sweep));
    EXPECT_EQ(l[1].key, "lambda=0.002");
    EXPECT_EQ(sweep_points(ExperimentConfig{}).front().key, "single");
}

TEST(BenchSweep, InstancesArePairedAcrossDepths) {
    const ExperimentConfig c;
    const MaxCutInstance a = make_instance(c, 8, 3, 99);
    const MaxCutInstance b = make_instance(c, 8, 3, 99);
    const MaxCutInstance other = make_instance(c, 8, 4, 99);
    ASSERT_EQ(a.num_edges(), b.num_edges());
    for (int i = 0; i < a.num_edges(); ++i) EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_TRUE(a.cached_optimum().has_value());
    EXPECT_NE(a.seed, other.seed);
}

TEST(BenchRun, RecordCountSchemaAndDeterminism) {
    ExperimentConfig c = tiny(Experiment::qubit_sweep);
    c.n_values = {3, 4, 6};
    const fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
    const ExperimentOutput out = run_experiment(c, 77, d1.string());
    run_experiment(c, 77, d2.string(), 2);
    EXPECT_EQ(out.cells.size(), 3U * 2U * 3U);
    const std::string jsonl = slurp(d1 / "records.jsonl");
    EXPECT_EQ(jsonl, slurp(d2 / "records.jsonl"));
    EXPECT_TRUE(fs::exists(d1 / "metadata.json"));
    EXPECT_EQ(config_from_ini(slurp(d1 / "config.ini")).n_values, c.n_values);

    const auto records = read_jsonl((d1 / "records.jsonl").string());
    ASSERT_EQ(records.size(), 18U);
    for (const Json& r : records) {
        for (const char* key : {"method", "n", "p", "lambda", "instance_seed", "run_seed", "final_mode_accuracy",
                                "final_expectation_accuracy", "final_best_sample_accuracy", "total_shots",
                                "optimization_shots", "final_eval_shots", "shots_to_threshold", "trials",
                                "stop_reason", "avg_point_shots", "avg_distinct", "config_hash", "master_seed"}) {
            EXPECT_TRUE(r.contains(key)) << key;
        }
        EXPECT_EQ(r["config_hash"], config_hash(c));
        EXPECT_EQ(r["total_shots"].get<std::int64_t>(), r["optimization_shots"].get<std::int64_t>() +
                                                            r["final_eval_shots"].get<std::int64_t>() +
                                                            r["stage2_shots"].get<std::int64_t>());
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST(BenchRun, AggregatesMatchRecords) {
    const ExperimentConfig c = tiny(Experiment::single);
    const fs::path d = fresh_dir("agg");
    run_experiment(c, 5, d.string());
    const auto records = read_jsonl((d / "records.jsonl").string());
    const auto rows = read_csv(d / "aggregate.csv");
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows[0], (std::vector<std::string>{"sweep_key", "method", "metric", "mean", "std", "count"}));
    int checked = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::vector<double> xs;
        for (const Json& r : records) {
            if (r["sweep_key"] == row[0] && r["method"] == row[1] && r[row[2]].is_number()) {
                xs.push_back(r[row[2]].get<double>());
            }
        }
        ASSERT_EQ(static_cast<std::size_t>(std::stoll(row[5])), xs.size());
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double ss = 0.0;
        for (double x : xs) ss += (x - mean) * (x - mean);
        const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
        EXPECT_NEAR(std::stod(row[3]), mean, 1e-12 * std::max(1.0, std::abs(mean)));
        EXPECT_NEAR(std::stod(row[4]), sd, 1e-12 * std::max(1.0, sd));
        ++checked;
    }
    EXPECT_GT(checked, 20);
    fs::remove_all(d);
}

TEST(BenchRun, DepthSweepPanels) {
    ExperimentConfig c = tiny(Experiment::depth_sweep);
    c.n_values = {4};
    c.instances_per_point = 1;
    c.bo.max_trials = 5;
    c.gd.iterations = 1;
    const fs::path d = fresh_dir("depth");
    run_experiment(c, 3, d.string());
    emit_report(d.string());
    const auto rows = read_csv(d / "fig_depth_panels.csv");
    ASSERT_EQ(rows.size(), 1U + 6U * 3U);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"p", "method", "final_mode_accuracy", "total_shots"}));
    std::map<std::string, int> per_method;
    for (std::size_t i = 1; i < rows.size(); ++i) ++per_method[rows[i][1]];
    for (const auto& [m, count] : per_method) EXPECT_EQ(count, 6) << m;
    fs::remove_all(d);
}

TEST(BenchReport, PlotDataSchemas) {
    ExperimentConfig c = tiny(Experiment::qubit_sweep);
    c.n_values = {4, 6};
    const fs::path d = fresh_dir("plots");
    const ExperimentOutput out = run_experiment(c, 8, d.string());
    emit_report(d.string());
    const auto pareto = read_csv(d / "fig_pareto.csv");
    EXPECT_EQ(pareto[0], (std::vector<std::string>{"method", "n", "total_shots", "final_mode_accuracy"}));
    EXPECT_EQ(pareto.size(), 1U + out.cells.size());
    const auto saving = read_csv(d / "fig_saving_rate.csv");
    ASSERT_EQ(saving.size(), 3U);
    for (std::size_t i = 1; i < saving.size(); ++i) {
        if (saving[i][1].empty() || saving[i][2].empty()) continue;
        EXPECT_NEAR(std::stod(saving[i][3]), 1.0 - std::stod(saving[i][1]) / std::stod(saving[i][2]), 1e-12);
    }
    EXPECT_EQ(read_csv(d / "fig_qubit_curves.csv").size(), 1U + 2U * 3U);
    fs::remove_all(d);
}

TEST(BenchReport, EmptyInputWritesHeaders) {
    const fs::path d = fresh_dir("empty");
    emit_plot_data({}, d.string());
    for (const char* f : {"fig_threshold_shots.csv", "fig_saving_rate.csv", "fig_pareto.csv", "fig_qubit_curves.csv",
                          "fig_depth_panels.csv", "fig_noise_pareto.csv", "fig_noise_panels.csv"}) {
        const auto rows = read_csv(d / f);
        EXPECT_EQ(rows.size(), 1U) << f;
    }
    EXPECT_EQ(aggregate_csv(aggregate({})), "sweep_key,method,metric,mean,std,count\n");
    fs::remove_all(d);
}

TEST(BenchRun, UnwritableOutputDirectory) {
    const fs::path file = fs::temp_directory_path() / "modeqaoa_test_blocker";
    std::ofstream(file) << "x";
    EXPECT_THROW(run_experiment(tiny(Experiment::single), 1, (file / "sub").string()), std::runtime_error);
    fs::remove(file);
}

}  // namespace
}  // namespace modeqaoa
