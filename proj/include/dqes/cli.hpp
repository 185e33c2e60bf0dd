// Copyright 2026 The DQES Workbench Authors
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

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dqes/landscape.hpp"
#include "dqes/mub.hpp"
#include "dqes/observable_io.hpp"
#include "dqes/problems.hpp"
#include "dqes/svg.hpp"
#include "dqes/vqe.hpp"

namespace dqes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Usage problems detected after argument parsing (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace fs = std::filesystem;

inline fs::path default_output_dir() {
    if (const char* dir = std::getenv("DQES_OUT_DIR"); dir && *dir) return dir;
    return ".";
}

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

inline std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Run manifest written next to each primary output. It is the only output
// carrying a timestamp; everything else is byte-reproducible.
struct RunManifest {
    std::vector<std::string> command_line;
    OrderedJson seeds = OrderedJson::object();
    OrderedJson input_hashes = OrderedJson::object();
    std::vector<std::string> outputs;

    std::string dump() const {
        OrderedJson j;
        j["command_line"] = command_line;
        j["tool_version"] = kToolVersion;
        j["seeds"] = seeds;
        j["input_hashes"] = input_hashes;
        j["outputs"] = outputs;
        j["timestamp"] = utc_timestamp();
        return j.dump(2) + "\n";
    }
};

struct LoadedObservable {
    Observable observable;
    std::string name;
    std::string hash;
};

inline LoadedObservable load_observable(const std::string& file, const std::string& fixture) {
    if (file.empty() == fixture.empty()) throw UsageError("give exactly one of --observable or --fixture");
    if (!fixture.empty()) {
        auto obs = named_fixture(fixture);
        return {obs, fixture, observable_hash(obs)};
    }
    auto obs = decode_observable(read_file(file));
    return {obs, fs::path(file).filename().string(), observable_hash(obs)};
}

struct Context {
    std::vector<std::string> args;
    std::ostream& out;
    std::ostream& err;
};

// ---------------------------------------------------------------- mub

struct MubOptions {
    std::string action;
    int n = 0;
    double tol = 1e-10;
    std::string output;
};

inline OrderedJson mub_report_json(const MubReport& r, int n) {
    OrderedJson j;
    j["n"] = n;
    j["bases"] = r.basis_count;
    j["states"] = r.state_count;
    j["max_orthonormality_deviation"] = r.max_orthonormality_deviation;
    j["max_unbiasedness_deviation"] = r.max_unbiasedness_deviation;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    return j;
}

/// `bases` is an array of bases, each an array of states, each an array of [re, im].
inline std::string encode_mub_set(const MubSet& set) {
    OrderedJson j;
    j["n"] = set.n;
    j["bases"] = OrderedJson::array();
    for (const auto& basis : set.bases) {
        OrderedJson b = OrderedJson::array();
        for (const auto& s : basis) {
            OrderedJson amps = OrderedJson::array();
            for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
            b.push_back(std::move(amps));
        }
        j["bases"].push_back(std::move(b));
    }
    return j.dump() + "\n";
}

inline MubSet decode_mub_set(std::string_view text) {
    auto j = nlohmann::json::parse(text);
    MubSet set;
    set.n = j.at("n").get<int>();
    for (const auto& b : j.at("bases")) {
        std::vector<StateVector> basis;
        for (const auto& s : b) {
            std::vector<Complex> amps;
            for (const auto& a : s) amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
            basis.push_back(StateVector::normalized(set.n, std::move(amps)));
        }
        set.bases.push_back(std::move(basis));
    }
    return set;
}

inline int cmd_mub(const Context& ctx, const MubOptions& o) {
    if (o.n < 1 || o.n > kMaxMubQubits) {
        throw UsageError("full MUB sets are available for 1 <= n <= 3, got n = " + std::to_string(o.n));
    }
    if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
    MubSet set = build_full_mub_set(o.n);
    MubReport report = verify_mub_set(set, o.tol);
    if (o.action == "verify") {
        ctx.out << mub_report_json(report, o.n).dump(2) << "\n";
        if (!o.output.empty()) write_file(o.output, mub_report_json(report, o.n).dump(2) + "\n");
        return report.passed ? kExitOk : kExitFailure;
    }
    fs::path path = o.output.empty() ? default_output_dir() / ("mub" + std::to_string(o.n) + ".json") : fs::path(o.output);
    write_file(path, encode_mub_set(set));
    ctx.out << "wrote " << set.bases.size() << " bases (" << set.state_count() << " states) to " << path.string()
            << "\n";
    return report.passed ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------- landscape

struct LandscapeOptions {
    std::string observable_file, fixture;
    int k = 0;
    bool full = false;
    std::string output, plot, stats;
    bool per_subset = false;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
};

inline LandscapeReport compute_landscape(const LoadedObservable& lo, bool full, int k) {
    const int n = lo.observable.qubits();
    if (full) {
        if (n > kMaxMubQubits) throw UsageError("--full needs n <= 3; use --k for " + std::to_string(n) + " qubits");
        return run_full_dqes(lo.observable, build_full_mub_set(n), lo.name);
    }
    if (k < 1 || k > kMaxMubQubits || k > n) {
        throw UsageError("--k must satisfy 1 <= K <= min(n, 3) = " + std::to_string(std::min(n, kMaxMubQubits)));
    }
    return run_partial_dqes(lo.observable, k, lo.name);
}

inline int cmd_landscape(const Context& ctx, const LandscapeOptions& o) {
    if (o.full == (o.k != 0)) throw UsageError("give exactly one of --full or --k");
    auto lo = load_observable(o.observable_file, o.fixture);
    auto report = compute_landscape(lo, o.full, o.k);
    if (o.shots > 0) report = resample_landscape(report, lo.observable, o.shots, o.seed);

    fs::path csv = o.output.empty() ? default_output_dir() / "landscape.csv" : fs::path(o.output);
    write_file(csv, landscape_csv(report));
    write_file(fs::path(csv.string() + ".meta.json"), landscape_sidecar(report));
    RunManifest manifest{ctx.args};
    manifest.input_hashes[lo.name] = lo.hash;
    if (o.shots > 0) manifest.seeds["sampling"] = o.seed;
    manifest.outputs.push_back(csv.string());

    auto table = basis_statistics(report, o.per_subset);
    ctx.out << statistics_csv(table);
    if (!o.stats.empty()) {
        write_file(o.stats, statistics_csv(table));
        manifest.outputs.push_back(o.stats);
    }
    if (!o.plot.empty()) {
        std::string title = "Energy landscape: " + lo.name + (report.full() ? " (full)" : " (K=" + std::to_string(report.k) + ")");
        write_file(o.plot, svg::landscape_plot(report, title));
        manifest.outputs.push_back(o.plot);
    }
    write_file(fs::path(csv.string() + ".manifest.json"), manifest.dump());
    ctx.out << "wrote " << report.records.size() << " records to " << csv.string() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- vqe

struct VqeOptions {
    std::string observable_file, fixture;
    std::string init = "top-3";
    std::string strategy = "shifted";
    int layers = 1;
    std::string axes;
    std::uint64_t seed = 0;
    std::string output;
    std::string plot;
    int k = 0;
    double rho = 0.5, tol = 1e-6;
    int max_evals = 500;
    std::optional<double> threshold;
    bool no_fallback = false;
};

struct InitRequest {
    InitStrategy strategy;
    std::string label;
};

inline PartialMubSpec parse_spec_item(const std::string& body, int n) {
    // B:S or B:S:q1-q2-...
    std::vector<std::string> parts;
    std::stringstream ss(body);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 2 && parts.size() != 3) throw UsageError("spec init must be spec:B:S[:q1-q2-..]");
    PartialMubSpec spec;
    spec.n = n;
    try {
        spec.basis_index = std::stoi(parts[0]);
        spec.state_index = std::stoi(parts[1]);
        if (parts.size() == 3) {
            std::stringstream qs(parts[2]);
            for (std::string q; std::getline(qs, q, '-');) spec.subset.push_back(std::stoi(q));
        } else {
            for (int q = 1; q <= std::min(n, kMaxMubQubits); ++q) spec.subset.push_back(q);
        }
    } catch (const std::logic_error&) {
        throw UsageError("spec init must be spec:B:S[:q1-q2-..] with integer fields");
    }
    spec.k = static_cast<int>(spec.subset.size());
    try {
        validate_spec(spec);
    } catch (const ConfigError& e) {
        throw UsageError(std::string("bad spec init: ") + e.what());
    }
    return spec;
}

inline std::vector<InitRequest> resolve_inits(const VqeOptions& o, const Observable& obs, int k,
                                              std::optional<LandscapeReport>& landscape) {
    const int n = obs.qubits();
    auto ensure_landscape = [&]() -> const LandscapeReport& {
        if (!landscape) {
            landscape = n <= kMaxMubQubits && k == n ? run_full_dqes(obs, build_full_mub_set(n))
                                                     : run_partial_dqes(obs, k);
        }
        return *landscape;
    };
    auto mub_init = [&](const PartialMubSpec& spec) -> InitStrategy {
        if (o.strategy == "fit") return ParameterFitInit{spec};
        return ShiftedMubInit{spec, {}};
    };
    std::vector<InitRequest> out;
    std::stringstream ss(o.init);
    for (std::string item; std::getline(ss, item, ',');) {
        auto count_after = [&](std::string_view prefix) {
            try {
                std::size_t used = 0;
                int c = std::stoi(item.substr(prefix.size()), &used);
                if (c < 1 || used != item.size() - prefix.size()) throw std::invalid_argument("count");
                return static_cast<std::size_t>(c);
            } catch (const std::logic_error&) {
                throw UsageError("bad init item '" + item + "'");
            }
        };
        if (item.rfind("top-", 0) == 0) {
            std::size_t c = count_after("top-");
            const auto& report = ensure_landscape();
            if (c > report.records.size()) throw UsageError("top-" + std::to_string(c) + " exceeds landscape size");
            for (const auto& r : rank_initial_states(report, c))
                out.push_back({mub_init(r.spec), r.spec.label()});
        } else if (item.rfind("random-", 0) == 0) {
            std::size_t c = count_after("random-");
            // Draw as many Haar states as there are MUB samples, keep the c lowest.
            const std::size_t pool = ensure_landscape().records.size();
            if (c > pool) throw UsageError("random-" + std::to_string(c) + " exceeds sample pool");
            std::vector<std::pair<double, std::uint64_t>> scored;
            for (std::size_t i = 0; i < pool; ++i) {
                std::uint64_t s = o.seed + i;
                scored.emplace_back(expectation_exact(obs, haar_random_state(n, s)), s);
            }
            std::stable_sort(scored.begin(), scored.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = 0; i < c; ++i) {
                std::string label = "haar:seed=" + std::to_string(scored[i].second);
                out.push_back({StateInit{haar_random_state(n, scored[i].second), label}, label});
            }
        } else if (item.rfind("spec:", 0) == 0) {
            auto spec = parse_spec_item(item.substr(5), n);
            out.push_back({mub_init(spec), spec.label()});
        } else {
            throw UsageError("unknown init item '" + item + "' (use top-K, random-K or spec:B:S[:subset])");
        }
    }
    if (out.empty()) throw UsageError("--init resolved to no initial states");
    return out;
}

inline int cmd_vqe(const Context& ctx, const VqeOptions& o) {
    auto lo = load_observable(o.observable_file, o.fixture);
    const int n = lo.observable.qubits();
    if (o.strategy != "shifted" && o.strategy != "fit") throw UsageError("--strategy must be shifted or fit");
    std::string axes = o.axes.empty() ? (n == 1 ? "YZ" : "Y") : o.axes;
    AnsatzSpec ansatz = build_ansatz(n, o.layers, axes);
    OptimizerConfig config{o.rho, o.tol, o.max_evals, o.threshold};
    validate_config(config, ansatz.parameter_count());
    int k = o.k != 0 ? o.k : std::min(n, kMaxMubQubits);
    if (k < 1 || k > std::min(n, kMaxMubQubits)) throw UsageError("--k out of range");

    std::optional<LandscapeReport> landscape;
    auto inits = resolve_inits(o, lo.observable, k, landscape);

    std::vector<std::optional<VqeResult>> results(inits.size());
    std::vector<std::optional<std::string>> failures(inits.size());
    parallel_for(inits.size(), [&](std::size_t i) {
        try {
            results[i] = run_vqe(lo.observable, inits[i].strategy, ansatz, config, !o.no_fallback);
        } catch (const ConfigError& e) {
            failures[i] = e.what();
        }
    });
    for (const auto& f : failures)
        if (f) throw std::runtime_error(*f);

    std::optional<double> ground;
    if (n <= kMaxSpectrumQubits) ground = exact_spectrum(lo.observable).ground_energy;

    fs::path dir = o.output.empty() ? default_output_dir() / "vqe" : fs::path(o.output);
    RunManifest manifest{ctx.args};
    manifest.input_hashes[lo.name] = lo.hash;
    manifest.seeds["init"] = o.seed;

    OrderedJson summary;
    summary["observable"] = lo.name;
    summary["observable_hash"] = lo.hash;
    summary["ansatz"] = {{"n", n}, {"layers", ansatz.layers}, {"axes", to_string(ansatz.axes)},
                         {"parameters", ansatz.parameter_count()}};
    summary["config"] = config_json(config);
    summary["seed"] = o.seed;
    if (ground) summary["exact_ground_energy"] = *ground;
    summary["runs"] = OrderedJson::array();
    std::vector<OptimizationTrace> traces;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = *results[i];
        std::string stem = "trace_" + std::to_string(i + 1);
        write_file(dir / (stem + ".csv"), trace_csv(r.trace));
        manifest.outputs.push_back((dir / (stem + ".csv")).string());
        if (n == 1) write_file(dir / ("bloch_" + std::to_string(i + 1) + ".csv"), bloch_path_csv(ansatz, r.initial_state, r.trace));
        auto run = result_json(r, config, o.seed);
        run["trace"] = stem + ".csv";
        if (ground) run["error_vs_exact"] = r.final_energy - *ground;
        summary["runs"].push_back(std::move(run));
        traces.push_back(r.trace);
        labels.push_back(r.init_descriptor);
        ctx.out << r.init_descriptor << ": first " << format_g12(r.trace.entries.front().energy) << " final "
                << format_g12(r.final_energy) << " after " << r.trace.entries.size() << " evaluations ("
                << to_string(r.trace.termination) << ")\n";
    }
    write_file(dir / "summary.json", summary.dump(2) + "\n");
    manifest.outputs.push_back((dir / "summary.json").string());
    if (!o.plot.empty()) {
        write_file(o.plot, svg::trace_plot(traces, labels, "Energy curves: " + lo.name));
        manifest.outputs.push_back(o.plot);
    }
    write_file(dir / "manifest.json", manifest.dump());
    if (ground) ctx.out << "exact ground energy " << format_g12(*ground) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------ problem

struct ProblemOptions {
    std::string kind;
    int nodes = 0;
    double edge_prob = 0.5;
    std::uint64_t seed = 0;
    std::string graph_file;
    int n = 0;
    double czz = 0.0, cx = 0.0;
    std::string fixture;
    std::string output;
};

inline int cmd_problem(const Context& ctx, const ProblemOptions& o) {
    RunManifest manifest{ctx.args};
    fs::path out;
    if (o.kind == "maxcut") {
        GraphSpec g;
        if (!o.graph_file.empty()) {
            g = decode_graph(read_file(o.graph_file));
            manifest.input_hashes[o.graph_file] = content_hash(read_file(o.graph_file));
        } else {
            if (o.nodes < 2) throw UsageError("--nodes must be at least 2");
            if (!(o.edge_prob >= 0.0 && o.edge_prob <= 1.0)) throw UsageError("--edge-prob must lie in [0, 1]");
            g = random_graph(o.nodes, o.edge_prob, o.seed);
            manifest.seeds["graph"] = o.seed;
        }
        fs::path prefix = o.output.empty() ? default_output_dir() / ("maxcut" + std::to_string(g.node_count)) : fs::path(o.output);
        if (prefix.extension() == ".json") prefix.replace_extension();
        write_file(fs::path(prefix.string() + ".graph"), encode_graph(g, kToolVersion));
        out = fs::path(prefix.string() + ".json");
        write_file(out, encode_observable(maxcut_hamiltonian(g)));
        manifest.outputs.push_back(prefix.string() + ".graph");
        ctx.out << "graph with " << g.node_count << " nodes and " << g.edges.size() << " edges\n";
    } else if (o.kind == "ising") {
        if (o.n < 2) throw UsageError("--n must be at least 2");
        out = o.output.empty() ? default_output_dir() / ("ising" + std::to_string(o.n) + ".json") : fs::path(o.output);
        write_file(out, encode_observable(transverse_field_ising(o.n, o.czz, o.cx)));
    } else if (o.kind == "fixture") {
        Observable obs = [&] {
            try {
                return named_fixture(o.fixture);
            } catch (const ConfigError& e) {
                throw UsageError(e.what());
            }
        }();
        std::string stem = o.fixture;
        for (auto& c : stem)
            if (c == '+') c = 'p';
        out = o.output.empty() ? default_output_dir() / (stem + ".json") : fs::path(o.output);
        write_file(out, encode_observable(obs));
    } else {
        throw UsageError("unknown problem kind '" + o.kind + "'");
    }
    manifest.outputs.push_back(out.string());
    write_file(fs::path(out.string() + ".manifest.json"), manifest.dump());
    ctx.out << "wrote " << out.string() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- run

/// Entry point shared by the executable and the tests. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Discretized quantum exhaustive search workbench"};
    app.name("dqes");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    MubOptions mub;
    auto* mub_cmd = app.add_subcommand("mub", "Build and certify full MUB sets");
    mub_cmd->add_option("action", mub.action, "verify or export")->required()->check(CLI::IsMember({"verify", "export"}));
    mub_cmd->add_option("n", mub.n, "qubit count (1..3)")->required();
    mub_cmd->add_option("--tol", mub.tol, "certification tolerance");
    mub_cmd->add_option("-o,--out", mub.output, "output document");

    LandscapeOptions land;
    auto* land_cmd = app.add_subcommand("landscape", "Sweep exact energies over (partial) MUB states");
    land_cmd->add_option("--observable", land.observable_file, "observable JSON file");
    land_cmd->add_option("--fixture", land.fixture, "built-in observable");
    land_cmd->add_option("--k", land.k, "partial MUB constant K");
    land_cmd->add_flag("--full", land.full, "sweep a full MUB set (n <= 3)");
    land_cmd->add_option("-o,--out", land.output, "landscape CSV");
    land_cmd->add_option("--plot", land.plot, "SVG scatter plot");
    land_cmd->add_option("--stats", land.stats, "per-basis statistics CSV");
    land_cmd->add_flag("--per-subset", land.per_subset, "statistics per qubit subset");
    land_cmd->add_option("--shots", land.shots, "estimate energies from this many shots per term");
    land_cmd->add_option("--seed", land.seed, "sampling seed");

    VqeOptions vqe;
    auto* vqe_cmd = app.add_subcommand("vqe", "Run VQE from MUB or random initial states");
    vqe_cmd->add_option("--observable", vqe.observable_file, "observable JSON file");
    vqe_cmd->add_option("--fixture", vqe.fixture, "built-in observable");
    vqe_cmd->add_option("--init", vqe.init, "comma list of top-K, random-K, spec:B:S[:q1-q2]");
    vqe_cmd->add_option("--strategy", vqe.strategy, "MUB initialization: shifted or fit");
    vqe_cmd->add_option("--layers", vqe.layers, "ansatz layers");
    vqe_cmd->add_option("--axes", vqe.axes, "rotation axes Y or YZ (default Y, YZ for one qubit)");
    vqe_cmd->add_option("--seed", vqe.seed, "seed for random initial states");
    vqe_cmd->add_option("--k", vqe.k, "partial MUB constant used for top-K ranking");
    vqe_cmd->add_option("-o,--out", vqe.output, "output directory");
    vqe_cmd->add_option("--plot", vqe.plot, "SVG energy curves");
    vqe_cmd->add_option("--rho", vqe.rho, "initial trust radius");
    vqe_cmd->add_option("--tol", vqe.tol, "final trust radius");
    vqe_cmd->add_option("--max-evals", vqe.max_evals, "evaluation budget per run");
    vqe_cmd->add_option("--threshold", vqe.threshold, "stop once the energy reaches this value");
    vqe_cmd->add_flag("--no-fallback", vqe.no_fallback, "fail instead of falling back when a fit is unreachable");

    ProblemOptions prob;
    auto* prob_cmd = app.add_subcommand("problem", "Generate problem files");
    auto* gen = prob_cmd->add_subcommand("gen", "Write a graph and/or observable file");
    prob_cmd->require_subcommand(1);
    gen->add_option("kind", prob.kind, "maxcut, ising or fixture")->required()->check(CLI::IsMember({"maxcut", "ising", "fixture"}));
    gen->add_option("name", prob.fixture, "fixture name (for kind = fixture)");
    gen->add_option("--nodes", prob.nodes, "Max-Cut node count");
    gen->add_option("--edge-prob", prob.edge_prob, "Max-Cut edge probability");
    gen->add_option("--seed", prob.seed, "Max-Cut generator seed");
    gen->add_option("--graph", prob.graph_file, "build the Max-Cut observable from a graph file");
    gen->add_option("--n", prob.n, "Ising chain length");
    gen->add_option("--czz", prob.czz, "Ising ZZ coefficient");
    gen->add_option("--cx", prob.cx, "Ising X coefficient");
    gen->add_option("-o,--out", prob.output, "output path (prefix for maxcut)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<std::string> command_line{"dqes"};
    command_line.insert(command_line.end(), args.begin(), args.end());
    Context ctx{command_line, out, err};
    try {
        if (*mub_cmd) return cmd_mub(ctx, mub);
        if (*land_cmd) return cmd_landscape(ctx, land);
        if (*vqe_cmd) return cmd_vqe(ctx, vqe);
        return cmd_problem(ctx, prob);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace dqes::cli
