// Command-line front end: hashing, golden-vector verification, seeded
// dynamics experiments, and a small orbit simulator.
//
// Exit codes: 0 success / property satisfied, 1 property or verification
// failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chaoshash/chaoshash.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace chaoshash;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_json_file(const std::string& path, const nlohmann::json& value) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << value.dump(2) << "\n";
}

int run_hash(const std::string& file, const std::string& mode, const std::string& out_format) {
    const std::string bytes = read_input(file);
    const Digest digest =
        hash(bytes, mode == "ascii7" ? EncodingMode::ascii7 : EncodingMode::bytes);
    if (out_format == "bin") {
        std::fwrite(digest.bytes().data(), 1, digest.bytes().size(), stdout);
        std::fflush(stdout);
    } else {
        std::cout << digest.hex() << "\n";
    }
    return 0;
}

int run_vectors_verify(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + file + "'");
    std::string line;
    std::size_t line_no = 0, verified = 0;
    std::vector<std::size_t> mismatches;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            std::cerr << "line " << line_no << ": not valid JSON\n";
            return 2;
        }
        if (!entry.is_object() || !entry.contains("message") || !entry["message"].is_string() ||
            !entry.contains("mode") || !entry["mode"].is_string() || !entry.contains("digest") ||
            !entry["digest"].is_string()) {
            std::cerr << "line " << line_no << ": expected message, mode, and digest fields\n";
            return 2;
        }
        const std::string mode = entry["mode"].get<std::string>();
        if (mode != "ascii7" && mode != "bytes") {
            std::cerr << "line " << line_no << ": unknown mode '" << mode << "'\n";
            return 2;
        }
        Digest expected = Digest(CellState(SystemSize(256)));
        Digest actual = expected;
        try {
            expected = Digest::from_hex(entry["digest"].get<std::string>());
            actual = hash(entry["message"].get<std::string>(),
                          mode == "ascii7" ? EncodingMode::ascii7 : EncodingMode::bytes);
        } catch (const std::exception& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            return 2;
        }
        if (actual == expected) {
            ++verified;
        } else {
            std::cout << "line " << line_no << ": digest mismatch, got " << actual.hex() << "\n";
            mismatches.push_back(line_no);
        }
    }
    if (!mismatches.empty()) {
        std::cout << mismatches.size() << " of " << verified + mismatches.size()
                  << " vectors failed\n";
        return 1;
    }
    std::cout << "verified " << verified << " vectors\n";
    return 0;
}

int run_avalanche(std::size_t trials, std::size_t msg_len, std::uint64_t seed,
                  const std::string& json_path) {
    const AvalancheReport report = avalanche_experiment(trials, msg_len, seed);
    if (!json_path.empty()) write_json_file(json_path, to_json(report));
    std::cout << "avalanche: trials=" << report.trials << " message_bits=" << report.message_bits
              << " mean=" << to_decimal_string(report.mean, 6)
              << " stddev=" << sqrt_decimal_string(report.variance, 6) << " min=" << report.min
              << " max=" << report.max << "\n";
    if (report.min == 0) {
        std::cout << "property violated: a single-bit flip left the digest unchanged\n";
        return 1;
    }
    return 0;
}

int run_sensitivity(std::size_t n, const std::string& delta_text, std::size_t points,
                    std::uint64_t seed, const std::string& json_path) {
    const Rational delta = parse_rational(delta_text);
    const SensitivityExperiment experiment =
        run_sensitivity_experiment(SystemSize(n), delta, points, seed);
    if (!json_path.empty()) {
        nlohmann::json out{{"n", n},
                           {"delta", to_fraction_string(delta)},
                           {"points", points},
                           {"seed", std::to_string(seed)},
                           {"failures", experiment.failures}};
        nlohmann::json reports = nlohmann::json::array();
        for (const SensitivityReport& r : experiment.reports) reports.push_back(to_json(r));
        out["reports"] = std::move(reports);
        write_json_file(json_path, out);
    }
    std::cout << "sensitivity: n=" << n << " delta=" << to_fraction_string(delta)
              << " points=" << points << " failures=" << experiment.failures << "\n";
    return experiment.failures == 0 ? 0 : 1;
}

int run_expansivity(std::size_t n, std::size_t max_prefix, std::size_t max_period,
                    std::size_t horizon, const std::string& json_path) {
    const ExpansivityScan scan = expansivity_scan(SystemSize(n), max_prefix, max_period, horizon);
    if (!json_path.empty()) write_json_file(json_path, to_json(scan.report));
    std::cout << "expansivity: n=" << n << " pairs_checked=" << scan.report.pairs_checked
              << " min_max_separation=" << to_fraction_string(scan.report.min_max_separation)
              << " horizon=" << scan.report.horizon
              << " separation_failures=" << scan.separation_failures
              << " sharp_failures=" << scan.sharp_failures << "\n";
    return scan.passed() ? 0 : 1;
}

int run_continuity(std::size_t n, std::size_t pairs, std::size_t m, std::uint64_t seed,
                   const std::string& json_path) {
    const ContinuityExperiment experiment =
        run_continuity_experiment(SystemSize(n), pairs, m, seed);
    if (!json_path.empty()) write_json_file(json_path, to_json(experiment));
    std::cout << "continuity: n=" << n << " pairs=" << pairs << " m=" << m
              << " failures=" << experiment.failures << "\n";
    return experiment.failures == 0 ? 0 : 1;
}

int run_simulate(std::size_t n, const std::string& state_bits, const std::string& strategy_text,
                 std::size_t steps, const std::string& rule) {
    if (n == 0 || n > 16) throw std::invalid_argument("simulate: n must be in [1,16]");
    const CellState state = CellState::from_string(state_bits);
    if (state.size() != n)
        throw std::invalid_argument("simulate: state literal must have exactly n bits");
    const Strategy strategy = Strategy::parse(strategy_text);
    if (static_cast<std::size_t>(strategy.max_entry()) > n)
        throw std::invalid_argument("simulate: strategy entry exceeds n");
    const IterationFunction f =
        rule == "identity" ? IterationFunction::identity() : IterationFunction::negation();

    const PhasePoint start(strategy, state);
    const std::vector<PhasePoint> trajectory = orbit(f, start, steps);
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        const PhasePoint& p = trajectory[t];
        std::cout << t << " " << p.strategy().head() << " " << p.state().to_string() << " "
                  << distance(p, start).decimal() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaotic-iterations hash and dynamics analysis"};
    app.require_subcommand(1);

    auto* hash_cmd = app.add_subcommand("hash", "hash a file or stdin");
    std::string hash_file = "-";
    std::string hash_mode = "ascii7";
    std::string hash_out = "hex";
    hash_cmd->add_option("FILE", hash_file, "input file, - for stdin")->capture_default_str();
    hash_cmd->add_option("--mode", hash_mode, "message encoding")
        ->check(CLI::IsMember({"ascii7", "bytes"}))
        ->capture_default_str();
    hash_cmd->add_option("--out", hash_out, "digest rendering")
        ->check(CLI::IsMember({"hex", "bin"}))
        ->capture_default_str();

    auto* vectors_cmd = app.add_subcommand("vectors", "golden digest vectors");
    vectors_cmd->require_subcommand(1);
    auto* verify_cmd = vectors_cmd->add_subcommand("verify", "recompute every vector in a file");
    std::string vectors_file;
    verify_cmd->add_option("FILE", vectors_file, "JSONL vector file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "seeded dynamics experiments");
    analyze_cmd->require_subcommand(1);

    auto* avalanche_cmd = analyze_cmd->add_subcommand("avalanche", "digest single-bit avalanche");
    std::size_t av_trials = 0, av_msg_len = 0;
    std::uint64_t av_seed = 0;
    std::string av_json;
    avalanche_cmd->add_option("--trials", av_trials, "number of trials")->required();
    avalanche_cmd->add_option("--msg-len", av_msg_len, "message length in bytes")->required();
    avalanche_cmd->add_option("--seed", av_seed, "experiment seed")->required();
    avalanche_cmd->add_option("--json", av_json, "write the report to this path");

    auto* sensitivity_cmd =
        analyze_cmd->add_subcommand("sensitivity", "all-cell separation witnesses");
    std::size_t se_n = 0, se_points = 0;
    std::uint64_t se_seed = 1;
    std::string se_delta, se_json;
    sensitivity_cmd->add_option("--n", se_n, "cell count (even)")->required();
    sensitivity_cmd->add_option("--delta", se_delta, "neighborhood radius, e.g. 1e-6 or 1/100")
        ->required();
    sensitivity_cmd->add_option("--points", se_points, "number of seeded points")->required();
    sensitivity_cmd->add_option("--seed", se_seed, "experiment seed")->capture_default_str();
    sensitivity_cmd->add_option("--json", se_json, "write the reports to this path");

    auto* expansivity_cmd =
        analyze_cmd->add_subcommand("expansivity", "exhaustive pair separation scan");
    std::size_t ex_n = 0, ex_max_prefix = 0, ex_max_period = 0, ex_horizon = 0;
    std::string ex_json;
    expansivity_cmd->add_option("--n", ex_n, "cell count (at most 3)")->required();
    expansivity_cmd->add_option("--max-prefix", ex_max_prefix, "largest prefix length")->required();
    expansivity_cmd->add_option("--max-period", ex_max_period, "largest block length")->required();
    expansivity_cmd->add_option("--horizon", ex_horizon, "steps to scan")->required();
    expansivity_cmd->add_option("--json", ex_json, "write the report to this path");

    auto* continuity_cmd =
        analyze_cmd->add_subcommand("continuity", "prefix propagation on random pairs");
    std::size_t co_n = 0, co_pairs = 0, co_m = 0;
    std::uint64_t co_seed = 1;
    std::string co_json;
    continuity_cmd->add_option("--n", co_n, "cell count")->required();
    continuity_cmd->add_option("--pairs", co_pairs, "number of seeded pairs")->required();
    continuity_cmd->add_option("--m", co_m, "shared schedule terms")->required();
    continuity_cmd->add_option("--seed", co_seed, "experiment seed")->capture_default_str();
    continuity_cmd->add_option("--json", co_json, "write the report to this path");

    auto* simulate_cmd = app.add_subcommand("simulate", "print a small orbit");
    std::size_t si_n = 0, si_steps = 0;
    std::string si_state, si_strategy, si_rule = "f0";
    simulate_cmd->add_option("--n", si_n, "cell count, at most 16")->required();
    simulate_cmd->add_option("--state", si_state, "initial state bits")->required();
    simulate_cmd->add_option("--strategy", si_strategy, "schedule literal, e.g. 1,2(2,1)")
        ->required();
    simulate_cmd->add_option("--steps", si_steps, "steps to run")->required();
    simulate_cmd->add_option("--f", si_rule, "cell update rule")
        ->check(CLI::IsMember({"f0", "identity"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hash_cmd->parsed()) return run_hash(hash_file, hash_mode, hash_out);
        if (verify_cmd->parsed()) return run_vectors_verify(vectors_file);
        if (avalanche_cmd->parsed()) return run_avalanche(av_trials, av_msg_len, av_seed, av_json);
        if (sensitivity_cmd->parsed())
            return run_sensitivity(se_n, se_delta, se_points, se_seed, se_json);
        if (expansivity_cmd->parsed())
            return run_expansivity(ex_n, ex_max_prefix, ex_max_period, ex_horizon, ex_json);
        if (continuity_cmd->parsed()) return run_continuity(co_n, co_pairs, co_m, co_seed, co_json);
        if (simulate_cmd->parsed())
            return run_simulate(si_n, si_state, si_strategy, si_steps, si_rule);
    } catch (const std::exception& e) {
        std::cerr << "chaoshash: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
