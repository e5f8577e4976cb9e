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

#include "modeqaoa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "modeqaoa/random.hpp"

namespace modeqaoa {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

const std::vector<std::string> kAggregatedMetrics = {
    "final_mode_accuracy", "final_expectation_accuracy", "final_best_sample_accuracy",
    "total_shots",         "optimization_shots",         "shots_to_threshold",
    "trials",              "avg_point_shots",            "avg_distinct",
    "S_q",                 "S_cl"};

std::string fmt(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

template <typename T>
std::string join(const std::vector<T>& xs, auto&& show) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += show(xs[i]);
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& raw, const std::string& key) {
    const std::string s = trim(raw);
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("config: bad value for " + key + ": '" + raw + "'");
    }
    return value;
}

bool parse_bool(const std::string& raw, const std::string& key) {
    const std::string s = trim(raw);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError("config: bad boolean for " + key + ": '" + raw + "'");
}

template <typename T, typename F>
std::vector<T> parse_list(const std::string& raw, const std::string& key, F&& one) {
    std::vector<T> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(one(item, key));
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

WeightScheme parse_weights(const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "unit") return WeightScheme::unit;
    if (s == "uniform") return WeightScheme::uniform;
    throw ConfigError("config: weights must be unit or uniform");
}

// Sets one key. Returns false when the key is unknown.
bool set_key(ExperimentConfig& c, const std::string& key, const std::string& v) {
    auto i64 = [&](std::int64_t& dst) { dst = parse_number<std::int64_t>(v, key); };
    auto i32 = [&](int& dst) { dst = parse_number<int>(v, key); };
    auto f64 = [&](double& dst) { dst = parse_number<double>(v, key); };
    auto flag = [&](bool& dst) { dst = parse_bool(v, key); };

    if (key == "experiment.n_values") c.n_values = parse_list<int>(v, key, parse_number<int>);
    else if (key == "experiment.p_values") c.p_values = parse_list<int>(v, key, parse_number<int>);
    else if (key == "experiment.noise_values") c.noise_values = parse_list<double>(v, key, parse_number<double>);
    else if (key == "experiment.degree") i32(c.degree);
    else if (key == "experiment.instances_per_point") i32(c.instances_per_point);
    else if (key == "experiment.weights") c.weights = parse_weights(v);
    else if (key == "experiment.methods") {
        c.methods = parse_list<Method>(v, key, [](const std::string& s, const std::string&) { return parse_method(trim(s)); });
    }
    else if (key == "experiment.threshold") f64(c.threshold);
    else if (key == "experiment.stage2") flag(c.stage2);
    else if (key == "adaptive.pilot_shots") i64(c.adaptive.pilot_shots);
    else if (key == "adaptive.growth") f64(c.adaptive.growth);
    else if (key == "adaptive.max_shots") i64(c.adaptive.max_shots);
    else if (key == "adaptive.tau_conf") f64(c.adaptive.tau_conf);
    else if (key == "adaptive.tau_var") f64(c.adaptive.tau_var);
    else if (key == "adaptive.bootstrap_resamples") i32(c.adaptive.bootstrap_resamples);
    else if (key == "tpe.startup_trials") i32(c.bo.tpe.startup_trials);
    else if (key == "tpe.good_fraction") f64(c.bo.tpe.good_fraction);
    else if (key == "tpe.candidates_per_suggest") i32(c.bo.tpe.candidates_per_suggest);
    else if (key == "tpe.bandwidth_floor") f64(c.bo.tpe.bandwidth_floor);
    else if (key == "stagnation.enabled") {
        if (parse_bool(v, key)) {
            if (!c.bo.stagnation) c.bo.stagnation = StagnationConfig{};
        } else {
            c.bo.stagnation.reset();
        }
    }
    else if (key == "stagnation.patience") {
        if (!c.bo.stagnation) c.bo.stagnation = StagnationConfig{};
        i32(c.bo.stagnation->patience);
    }
    else if (key == "stagnation.min_delta") {
        if (!c.bo.stagnation) c.bo.stagnation = StagnationConfig{};
        f64(c.bo.stagnation->min_delta);
    }
    else if (key == "budget.max_trials") i32(c.bo.max_trials);
    else if (key == "budget.fixed_shots") i64(c.fixed_shots);
    else if (key == "budget.final_shots") {
        i64(c.bo.final_shots);
        c.gd.final_shots = c.bo.final_shots;
    }
    else if (key == "gd.iterations") i32(c.gd.iterations);
    else if (key == "gd.learning_rate") f64(c.gd.learning_rate);
    else if (key == "gd.beta1") f64(c.gd.adam.beta1);
    else if (key == "gd.beta2") f64(c.gd.adam.beta2);
    else if (key == "gd.eps") f64(c.gd.adam.eps);
    else if (key == "gd.exact") flag(c.gd.exact);
    else if (key == "stage2.steps") i32(c.amplify.steps);
    else if (key == "stage2.shots_per_shift") i64(c.amplify.shots_per_shift);
    else if (key == "stage2.learning_rate") f64(c.amplify.learning_rate);
    else if (key == "stage2.reeval_period") i32(c.amplify.reeval_period);
    else if (key == "stage2.use_exact") flag(c.amplify.use_exact);
    else return false;
    return true;
}

double sample_std(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

void write_file(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

Json make_record(const ExperimentConfig& cfg, const std::string& hash, std::uint64_t master_seed,
                 const SweepPoint& sp, int instance_index, const MaxCutInstance& instance, Method method,
                 std::uint64_t run_seed, const RunResult& run) {
    const MetricsReport m = compute_metrics(instance, run, cfg.threshold);
    Json r;
    r["method"] = to_string(method);
    r["sweep_key"] = sp.key;
    r["n"] = sp.n;
    r["p"] = sp.p;
    r["lambda"] = sp.lambda;
    r["instance_index"] = instance_index;
    r["instance_seed"] = instance.seed.value_or(0);
    r["run_seed"] = run_seed;
    r["master_seed"] = master_seed;
    r["config_hash"] = hash;
    r["m"] = instance.num_edges();
    r["optimum"] = instance.optimum().value;
    r["final_mode"] = run.final_eval.mode.to_text();
    r["final_mode_accuracy"] = m.final_mode_accuracy;
    r["final_expectation_accuracy"] = m.final_expectation_accuracy;
    r["final_best_sample_accuracy"] = m.final_best_sample_accuracy;
    r["total_shots"] = m.total_shots;
    r["optimization_shots"] = run.ledger.optimization_shots;
    r["final_eval_shots"] = run.ledger.final_eval_shots;
    r["stage2_shots"] = run.ledger.stage2_shots;
    r["shots_to_threshold"] = m.shots_to_threshold ? Json(*m.shots_to_threshold) : Json(nullptr);
    r["trials"] = static_cast<std::int64_t>(run.trials.size());
    r["stop_reason"] = to_string(run.stop_reason);
    r["avg_point_shots"] = run.ledger.average_point_shots();
    r["avg_distinct"] = run.ledger.average_distinct();
    r["S_q"] = nullptr;
    r["S_cl"] = nullptr;
    if (run.stage2) {
        r["stage2_initial_probability"] = run.stage2->trace.front();
        r["stage2_final_probability"] = run.stage2->trace.back();
    }
    return r;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const std::string& c : cells) {
        if (!first) out += ',';
        out += c;
        first = false;
    }
    return out + '\n';
}

// Mean of a metric over records of one (sweep key, method), skipping nulls.
std::optional<double> mean_metric(const std::vector<const Json*>& group, const std::string& metric) {
    double sum = 0.0;
    int count = 0;
    for (const Json* r : group) {
        if (r->contains(metric) && (*r)[metric].is_number()) {
            sum += (*r)[metric].get<double>();
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return sum / count;
}

}  // namespace

std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::single: return "single";
        case Experiment::qubit_sweep: return "qubit_sweep";
        case Experiment::depth_sweep: return "depth_sweep";
        case Experiment::noise_sweep: return "noise_sweep";
    }
    return "single";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::map_bo: return "map_bo";
        case Method::exp_bo: return "exp_bo";
        case Method::exp_gd: return "exp_gd";
    }
    return "map_bo";
}

Experiment parse_experiment(const std::string& s) {
    for (Experiment e : {Experiment::single, Experiment::qubit_sweep, Experiment::depth_sweep, Experiment::noise_sweep}) {
        if (to_string(e) == s) return e;
    }
    throw ConfigError("unknown experiment '" + s + "'");
}

Method parse_method(const std::string& s) {
    for (Method m : {Method::map_bo, Method::exp_bo, Method::exp_gd}) {
        if (to_string(m) == s) return m;
    }
    throw ConfigError("unknown method '" + s + "'");
}

ExperimentConfig ExperimentConfig::defaults_for(Experiment experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    switch (experiment) {
        case Experiment::single:
            break;
        case Experiment::qubit_sweep:
            c.n_values = {3, 4, 6, 8, 10, 12};
            break;
        case Experiment::depth_sweep:
            c.p_values = {1, 2, 3, 4, 5, 6};
            break;
        case Experiment::noise_sweep:
            c.noise_values = {0.0, 0.002, 0.004, 0.006, 0.008, 0.01};
            break;
    }
    return c;
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
    if (n_values.empty() || p_values.empty() || noise_values.empty()) fail("sweep lists must be non-empty");
    for (int n : n_values) {
        if (n < 2 || n > kMaxSimulatedQubits) fail("n out of range [2, 24]");
    }
    for (int p : p_values) {
        if (p < 1) fail("p must be >= 1");
    }
    for (double l : noise_values) {
        if (!(l >= 0.0 && l <= 1.0)) fail("noise lambda must lie in [0, 1]");
    }
    if (degree < 1) fail("degree must be >= 1");
    if (instances_per_point < 1) fail("instances_per_point must be >= 1");
    if (methods.empty()) fail("methods must be non-empty");
    if (!(threshold > 0.0 && threshold <= 1.0)) fail("threshold must lie in (0, 1]");
    if (fixed_shots < 1) fail("fixed_shots must be >= 1");
    try {
        adaptive.validate();
        bo.tpe.validate();
        if (bo.stagnation) bo.stagnation->validate();
        if (bo.max_trials < 1) fail("max_trials must be >= 1");
        if (bo.final_shots < 1) fail("final_shots must be >= 1");
        gd.validate();
        amplify.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

std::string config_to_ini(const ExperimentConfig& c) {
    std::ostringstream o;
    auto ints = [](const std::vector<int>& xs) { return join(xs, [](int x) { return std::to_string(x); }); };
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    o << "[experiment]\n"
      << "type = " << to_string(c.experiment) << '\n'
      << "n_values = " << ints(c.n_values) << '\n'
      << "p_values = " << ints(c.p_values) << '\n'
      << "noise_values = " << join(c.noise_values, [](double x) { return fmt(x); }) << '\n'
      << "degree = " << c.degree << '\n'
      << "instances_per_point = " << c.instances_per_point << '\n'
      << "weights = " << (c.weights == WeightScheme::unit ? "unit" : "uniform") << '\n'
      << "methods = " << join(c.methods, [](Method m) { return to_string(m); }) << '\n'
      << "threshold = " << fmt(c.threshold) << '\n'
      << "stage2 = " << b(c.stage2) << "\n\n";
    o << "[adaptive]\n"
      << "pilot_shots = " << c.adaptive.pilot_shots << '\n'
      << "growth = " << fmt(c.adaptive.growth) << '\n'
      << "max_shots = " << c.adaptive.max_shots << '\n'
      << "tau_conf = " << fmt(c.adaptive.tau_conf) << '\n'
      << "tau_var = " << fmt(c.adaptive.tau_var) << '\n'
      << "bootstrap_resamples = " << c.adaptive.bootstrap_resamples << "\n\n";
    o << "[tpe]\n"
      << "startup_trials = " << c.bo.tpe.startup_trials << '\n'
      << "good_fraction = " << fmt(c.bo.tpe.good_fraction) << '\n'
      << "candidates_per_suggest = " << c.bo.tpe.candidates_per_suggest << '\n'
      << "bandwidth_floor = " << fmt(c.bo.tpe.bandwidth_floor) << "\n\n";
    const StagnationConfig st = c.bo.stagnation.value_or(StagnationConfig{});
    o << "[stagnation]\n"
      << "enabled = " << b(c.bo.stagnation.has_value()) << '\n'
      << "patience = " << st.patience << '\n'
      << "min_delta = " << fmt(st.min_delta) << "\n\n";
    o << "[budget]\n"
      << "max_trials = " << c.bo.max_trials << '\n'
      << "fixed_shots = " << c.fixed_shots << '\n'
      << "final_shots = " << c.bo.final_shots << "\n\n";
    o << "[gd]\n"
      << "iterations = " << c.gd.iterations << '\n'
      << "learning_rate = " << fmt(c.gd.learning_rate) << '\n'
      << "beta1 = " << fmt(c.gd.adam.beta1) << '\n'
      << "beta2 = " << fmt(c.gd.adam.beta2) << '\n'
      << "eps = " << fmt(c.gd.adam.eps) << '\n'
      << "exact = " << b(c.gd.exact) << "\n\n";
    o << "[stage2]\n"
      << "steps = " << c.amplify.steps << '\n'
      << "shots_per_shift = " << c.amplify.shots_per_shift << '\n'
      << "learning_rate = " << fmt(c.amplify.learning_rate) << '\n'
      << "reeval_period = " << c.amplify.reeval_period << '\n'
      << "use_exact = " << b(c.amplify.use_exact) << '\n';
    return o.str();
}

ExperimentConfig config_from_ini(const std::string& text) {
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    Experiment experiment = Experiment::single;
    if (auto type = tree.get_optional<std::string>("experiment.type")) experiment = parse_experiment(trim(*type));
    ExperimentConfig cfg = ExperimentConfig::defaults_for(experiment);
    std::optional<std::string> stagnation_enabled;
    for (const auto& [section, body] : tree) {
        if (body.empty()) throw ConfigError("config: key '" + section + "' outside a section");
        for (const auto& [key, value] : body) {
            const std::string full = section + "." + key;
            if (full == "experiment.type") continue;
            if (full == "stagnation.enabled") {
                stagnation_enabled = value.data();
                continue;
            }
            if (!set_key(cfg, full, value.data())) throw ConfigError("config: unknown key '" + full + "'");
        }
    }
    // Applied last so that patience and min_delta do not re-enable stagnation.
    if (stagnation_enabled) set_key(cfg, "stagnation.enabled", *stagnation_enabled);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_ini(ss.str());
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("override must look like section.key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = assignment.substr(eq + 1);
    if (key == "experiment.type") {
        const ExperimentConfig d = ExperimentConfig::defaults_for(parse_experiment(trim(value)));
        cfg.experiment = d.experiment;
        cfg.n_values = d.n_values;
        cfg.p_values = d.p_values;
        cfg.noise_values = d.noise_values;
        return;
    }
    if (!set_key(cfg, key, value)) throw ConfigError("unknown config key '" + key + "'");
}

std::string config_hash(const ExperimentConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : config_to_ini(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
    std::vector<SweepPoint> out;
    const int n0 = cfg.n_values.front();
    const int p0 = cfg.p_values.front();
    const double l0 = cfg.noise_values.front();
    switch (cfg.experiment) {
        case Experiment::single:
            out.push_back({n0, p0, l0, "single"});
            break;
        case Experiment::qubit_sweep:
            for (int n : cfg.n_values) out.push_back({n, p0, l0, "n=" + std::to_string(n)});
            break;
        case Experiment::depth_sweep:
            for (int p : cfg.p_values) out.push_back({n0, p, l0, "p=" + std::to_string(p)});
            break;
        case Experiment::noise_sweep:
            for (double l : cfg.noise_values) out.push_back({n0, p0, l, "lambda=" + fmt(l)});
            break;
    }
    return out;
}

MaxCutInstance make_instance(const ExperimentConfig& cfg, int n, int index, std::uint64_t master_seed) {
    const std::uint64_t seed =
        derive_seed(master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(index)});
    const int degree = std::min(cfg.degree, n);
    MaxCutInstance g = random_regular(n, degree, seed);
    g = assign_weights(g, cfg.weights, derive_seed(seed, {0x77}));
    g.seed = seed;
    return g.with_optimum();
}

RunResult run_method(Method method, const MaxCutInstance& instance, int depth, double noise_lambda,
                     const ExperimentConfig& cfg, std::uint64_t seed) {
    RunResult run;
    switch (method) {
        case Method::map_bo:
            run = optimize_map_bo(instance, depth, cfg.adaptive, cfg.bo, noise_lambda, seed);
            break;
        case Method::exp_bo:
            run = optimize_exp_bo(instance, depth, cfg.fixed_shots, cfg.bo, noise_lambda, seed);
            break;
        case Method::exp_gd: {
            GdConfig gd = cfg.gd;
            gd.shots_per_eval = cfg.fixed_shots;
            run = optimize_exp_gd(instance, depth, gd, noise_lambda, seed);
            break;
        }
    }
    if (cfg.stage2) {
        const NoiseSpec noise = NoiseSpec::for_circuit(instance, depth, noise_lambda);
        run.stage2 = amplify(instance, run.best_params, run.best_bitstring, cfg.amplify, noise,
                             derive_seed(seed, {0x52}), run.ledger);
    }
    return run;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg, std::uint64_t master_seed,
                                const std::optional<std::string>& output_dir, int jobs) {
    cfg.validate();
    if (output_dir) {
        std::error_code ec;
        fs::create_directories(*output_dir, ec);
        if (ec || !fs::is_directory(*output_dir)) throw std::runtime_error("cannot create output directory " + *output_dir);
    }
    const std::string hash = config_hash(cfg);

    struct Cell {
        SweepPoint point;
        int instance_index;
        Method method;
    };
    std::vector<Cell> cells;
    for (const SweepPoint& sp : sweep_points(cfg)) {
        for (int i = 0; i < cfg.instances_per_point; ++i) {
            for (Method m : cfg.methods) cells.push_back({sp, i, m});
        }
    }

    ExperimentOutput out;
    out.cells.resize(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            try {
                const Cell& cell = cells[c];
                const MaxCutInstance instance = make_instance(cfg, cell.point.n, cell.instance_index, master_seed);
                std::uint64_t lambda_bits = 0;
                std::memcpy(&lambda_bits, &cell.point.lambda, sizeof lambda_bits);
                const std::uint64_t run_seed =
                    derive_seed(*instance.seed, {static_cast<std::uint64_t>(cell.point.p), lambda_bits,
                                                 static_cast<std::uint64_t>(cell.method)});
                RunResult run = run_method(cell.method, instance, cell.point.p, cell.point.lambda, cfg, run_seed);
                out.cells[c].record = make_record(cfg, hash, master_seed, cell.point, cell.instance_index, instance,
                                                  cell.method, run_seed, run);
                out.cells[c].run = std::move(run);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cells.size();
            }
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // Saving ratios for each map_bo cell against the exp_bo cell on the same instance and point.
    for (std::size_t a = 0; a < cells.size(); ++a) {
        if (cells[a].method != Method::map_bo) continue;
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (cells[b].method == Method::exp_bo && cells[b].point.key == cells[a].point.key &&
                cells[b].instance_index == cells[a].instance_index) {
                const RunResult& map_run = out.cells[a].run;
                const RunResult& exp_run = out.cells[b].run;
                const SavingRatios s = saving_ratios(
                    exp_run.ledger, static_cast<std::int64_t>(exp_run.ledger.per_point_shots.size()), map_run.ledger,
                    static_cast<std::int64_t>(map_run.ledger.per_point_shots.size()),
                    out.cells[a].record["m"].get<int>(),
                    cfg.adaptive.bootstrap_resamples);
                out.cells[a].record["S_q"] = s.quantum;
                out.cells[a].record["S_cl"] = s.classical;
            }
        }
    }

    if (output_dir) {
        const fs::path dir(*output_dir);
        std::string jsonl;
        std::vector<Json> records;
        for (const CellRecord& c : out.cells) {
            jsonl += c.record.dump() + '\n';
            records.push_back(c.record);
        }
        write_file(dir / "records.jsonl", jsonl);
        write_file(dir / "aggregate.csv", aggregate_csv(aggregate(records)));
        write_file(dir / "config.ini", config_to_ini(cfg));
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        Json meta = {{"created_utc", stamp}, {"master_seed", master_seed}, {"config_hash", hash},
                     {"records", out.cells.size()}, {"jobs", threads}};
        write_file(dir / "metadata.json", meta.dump(2) + '\n');
    }
    return out;
}

std::vector<AggregateRow> aggregate(const std::vector<Json>& records) {
    std::vector<std::pair<std::string, std::string>> groups;
    std::map<std::pair<std::string, std::string>, std::vector<const Json*>> members;
    for (const Json& r : records) {
        auto key = std::pair(r.at("sweep_key").get<std::string>(), r.at("method").get<std::string>());
        if (!members.contains(key)) groups.push_back(key);
        members[key].push_back(&r);
    }
    std::vector<AggregateRow> rows;
    for (const auto& key : groups) {
        for (const std::string& metric : kAggregatedMetrics) {
            std::vector<double> xs;
            for (const Json* r : members[key]) {
                if (r->contains(metric) && (*r)[metric].is_number()) xs.push_back((*r)[metric].get<double>());
            }
            if (xs.empty()) continue;
            AggregateRow row{key.first, key.second, metric};
            double sum = 0.0;
            for (double x : xs) sum += x;
            row.mean = sum / static_cast<double>(xs.size());
            row.std = sample_std(xs, row.mean);
            row.count = static_cast<std::int64_t>(xs.size());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
    std::string out = "sweep_key,method,metric,mean,std,count\n";
    for (const AggregateRow& r : rows) {
        out += csv_row({r.sweep_key, r.method, r.metric, fmt(r.mean), fmt(r.std), std::to_string(r.count)});
    }
    return out;
}

std::vector<Json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Json> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(Json::parse(line));
    }
    return out;
}

void emit_report(const std::string& dir) {
    const std::vector<Json> records = read_jsonl((fs::path(dir) / "records.jsonl").string());
    write_file(fs::path(dir) / "aggregate.csv", aggregate_csv(aggregate(records)));
    emit_plot_data(records, dir);
}

void emit_plot_data(const std::vector<Json>& records, const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, std::vector<const Json*>> groups;
    for (const Json& r : records) {
        auto key = std::pair(r.at("sweep_key").get<std::string>(), r.at("method").get<std::string>());
        if (!groups.contains(key)) order.push_back(key);
        groups[key].push_back(&r);
    }
    auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    auto starts = [](const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; };

    std::string threshold = "sweep_key,method,mean_shots_to_threshold,reached,count\n";
    std::string saving = "sweep_key,map_bo_shots,exp_bo_shots,saving_rate\n";
    std::string pareto = "method,n,total_shots,final_mode_accuracy\n";
    std::string qubit = "n,method,final_mode_accuracy,total_shots\n";
    std::string depth = "p,method,final_mode_accuracy,total_shots\n";
    std::string noise_pareto = "method,lambda,total_shots,final_mode_accuracy\n";
    std::string noise_panels = "lambda,method,final_mode_accuracy,total_shots\n";

    for (const Json& r : records) {
        pareto += csv_row({r.at("method").get<std::string>(), std::to_string(r.at("n").get<int>()),
                           std::to_string(r.at("total_shots").get<std::int64_t>()),
                           fmt(r.at("final_mode_accuracy").get<double>())});
        if (starts(r.at("sweep_key").get<std::string>(), "lambda=")) {
            noise_pareto += csv_row({r.at("method").get<std::string>(), fmt(r.at("lambda").get<double>()),
                                     std::to_string(r.at("total_shots").get<std::int64_t>()),
                                     fmt(r.at("final_mode_accuracy").get<double>())});
        }
    }
    std::vector<std::string> keys;
    for (const auto& [key, method] : order) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        const auto& g = groups[{key, method}];
        std::int64_t reached = 0;
        for (const Json* r : g) reached += (*r)["shots_to_threshold"].is_number() ? 1 : 0;
        threshold += csv_row({key, method, opt(mean_metric(g, "shots_to_threshold")), std::to_string(reached),
                              std::to_string(g.size())});
        const std::string acc = opt(mean_metric(g, "final_mode_accuracy"));
        const std::string shots = opt(mean_metric(g, "total_shots"));
        const std::string value = key.substr(key.find('=') + 1);
        if (starts(key, "n=")) qubit += csv_row({value, method, acc, shots});
        if (starts(key, "p=")) depth += csv_row({value, method, acc, shots});
        if (starts(key, "lambda=")) noise_panels += csv_row({value, method, acc, shots});
    }
    for (const std::string& key : keys) {
        auto map_it = groups.find({key, "map_bo"});
        auto exp_it = groups.find({key, "exp_bo"});
        if (map_it == groups.end() || exp_it == groups.end()) continue;
        const auto map_shots = mean_metric(map_it->second, "shots_to_threshold");
        const auto exp_shots = mean_metric(exp_it->second, "shots_to_threshold");
        std::optional<double> rate;
        if (map_shots && exp_shots && *exp_shots > 0.0) rate = 1.0 - *map_shots / *exp_shots;
        saving += csv_row({key, opt(map_shots), opt(exp_shots), opt(rate)});
    }
    const fs::path d(dir);
    write_file(d / "fig_threshold_shots.csv", threshold);
    write_file(d / "fig_saving_rate.csv", saving);
    write_file(d / "fig_pareto.csv", pareto);
    write_file(d / "fig_qubit_curves.csv", qubit);
    write_file(d / "fig_depth_panels.csv", depth);
    write_file(d / "fig_noise_pareto.csv", noise_pareto);
    write_file(d / "fig_noise_panels.csv", noise_panels);
}

}  // namespace modeqaoa
