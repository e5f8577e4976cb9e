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

// Command-line front end: gen, run, bench, report.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modeqaoa/bench.hpp"
#include "modeqaoa/resources.hpp"
#include "modeqaoa/serialize.hpp"

namespace fs = std::filesystem;
using namespace modeqaoa;

namespace {

constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

struct Common {
    std::string config_path;
    std::string experiment;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "INI config file");
    cmd->add_option("--experiment", c.experiment, "single | qubit_sweep | depth_sweep | noise_sweep");
    cmd->add_option("--set", c.overrides, "Override a key, e.g. --set adaptive.max_shots=800");
}

ExperimentConfig resolve_config(const Common& c) {
    ExperimentConfig cfg;
    if (!c.config_path.empty()) {
        cfg = load_config(c.config_path);
    } else if (!c.experiment.empty()) {
        cfg = ExperimentConfig::defaults_for(parse_experiment(c.experiment));
    }
    if (!c.config_path.empty() && !c.experiment.empty()) apply_override(cfg, "experiment.type=" + c.experiment);
    for (const std::string& o : c.overrides) apply_override(cfg, o);
    cfg.validate();
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mode-objective QAOA for MaxCut with adaptive shots"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write seeded random regular MaxCut instances");
    int gen_n = 10;
    int gen_degree = 3;
    int gen_count = 1;
    std::string gen_weights = "unit";
    std::uint64_t gen_seed = 0;
    std::string gen_out = ".";
    gen->add_option("--n", gen_n, "Number of vertices")->capture_default_str();
    gen->add_option("--degree", gen_degree, "Vertex degree")->capture_default_str();
    gen->add_option("--count", gen_count, "Number of instances")->capture_default_str();
    gen->add_option("--weights", gen_weights, "unit | uniform")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Master seed")->required();
    gen->add_option("--out", gen_out, "Output directory")->capture_default_str();

    // run
    auto* run = app.add_subcommand("run", "Run one method on one instance");
    Common run_common;
    add_common(run, run_common);
    std::string run_instance;
    std::string run_method_name = "map_bo";
    int run_p = 0;
    double run_lambda = -1.0;
    std::uint64_t run_seed = 0;
    std::string run_out;
    run->add_option("--instance", run_instance, "Instance JSON file")->required();
    run->add_option("--method", run_method_name, "map_bo | exp_bo | exp_gd")->capture_default_str();
    run->add_option("--p", run_p, "Circuit depth (default: first p value of the config)");
    run->add_option("--lambda", run_lambda, "Depolarizing rate per gate (default: first noise value)");
    run->add_option("--seed", run_seed, "Run seed")->required();
    run->add_option("--out", run_out, "Write the result JSON here instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a full experiment sweep");
    Common bench_common;
    add_common(bench, bench_common);
    std::uint64_t bench_seed = 0;
    std::string bench_out = "results";
    int bench_jobs = 1;
    bool bench_dump = false;
    bench->add_option("--seed", bench_seed, "Master seed")->required();
    bench->add_option("--out", bench_out, "Output directory")->capture_default_str();
    bench->add_option("--jobs", bench_jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_flag("--print-config", bench_dump, "Print the resolved config and exit");

    // report
    auto* report = app.add_subcommand("report", "Recompute aggregates and plot data from records.jsonl");
    std::string report_dir = "results";
    report->add_option("--dir", report_dir, "Directory holding records.jsonl")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        if (*gen) {
            if (gen_count < 1) throw ConfigError("--count must be >= 1");
            ExperimentConfig cfg;
            cfg.degree = gen_degree;
            if (gen_weights == "unit") cfg.weights = WeightScheme::unit;
            else if (gen_weights == "uniform") cfg.weights = WeightScheme::uniform;
            else throw ConfigError("--weights must be unit or uniform");
            if (gen_n < 2 || gen_n > kMaxSimulatedQubits) throw ConfigError("--n out of range [2, 24]");
            if (gen_degree < 1 || gen_degree > gen_n) throw ConfigError("--degree must lie in [1, n]");
            fs::create_directories(gen_out);
            for (int i = 0; i < gen_count; ++i) {
                const MaxCutInstance g = make_instance(cfg, gen_n, i, gen_seed);
                const fs::path path = fs::path(gen_out) / ("instance_n" + std::to_string(gen_n) + "_" +
                                                           std::to_string(i) + ".json");
                save_instance(g, path.string());
                std::cout << path.string() << '\n';
            }
        } else if (*run) {
            const ExperimentConfig cfg = resolve_config(run_common);
            const Method method = parse_method(run_method_name);
            const int depth = run_p > 0 ? run_p : cfg.p_values.front();
            const double lambda = run_lambda >= 0.0 ? run_lambda : cfg.noise_values.front();
            if (lambda > 1.0) throw ConfigError("--lambda must lie in [0, 1]");
            const MaxCutInstance instance = load_instance(run_instance).with_optimum();
            const RunResult result = run_method(method, instance, depth, lambda, cfg, run_seed);
            Json out;
            out["result"] = to_json(result);
            out["metrics"] = to_json(compute_metrics(instance, result, cfg.threshold));
            out["config_hash"] = config_hash(cfg);
            out["seed"] = run_seed;
            const std::string text = out.dump(2) + '\n';
            if (run_out.empty()) std::cout << text;
            else write_text(run_out, text);
        } else if (*bench) {
            const ExperimentConfig cfg = resolve_config(bench_common);
            if (bench_dump) {
                std::cout << config_to_ini(cfg);
                return 0;
            }
            const ExperimentOutput result = run_experiment(cfg, bench_seed, bench_out, bench_jobs);
            emit_report(bench_out);
            std::cout << result.cells.size() << " records written to " << bench_out << '\n';
        } else if (*report) {
            emit_report(report_dir);
            std::cout << "report written to " << report_dir << '\n';
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return 0;
}
