#include "qpigou/cli.hpp"

#include "qpigou/errors.hpp"
#include "qpigou/serialize.hpp"
#include "qpigou/sweep.hpp"
#include "qpigou/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace qpigou::cli {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::optional<std::string> game;
    std::optional<std::string> strategies;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<std::string> k_range;
    std::optional<std::string> gamma;
    std::optional<std::string> over;
    std::optional<int> gamma_steps;
    std::string format = "table";
    std::optional<std::string> out;
    bool parallel = false;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--game", o.game, "classical2 | classicalk | quantum2 | quantumk")
        ->check(CLI::IsMember({"classical2", "classicalk", "quantum2", "quantumk"}));
    cmd->add_option("--strategies", o.strategies, "p1p2 | p1p2q | p1p2m | scarpa")
        ->check(CLI::IsMember({"p1p2", "p1p2q", "p1p2m", "scarpa"}));
    cmd->add_option("--n", o.n, "total number of travellers (k-person games, default 10)");
    cmd->add_option("--gamma", o.gamma, "entanglement in [0, pi/2], or 'max'");
    cmd->add_option("--format", o.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", o.out, "write the payload to this file instead of stdout");
}

bool is_k_game(const std::string& game) { return game == "classicalk" || game == "quantumk"; }
bool is_quantum(const std::string& game) { return game == "quantum2" || game == "quantumk"; }

double parse_gamma(const std::string& text)
{
    if (text == "max") {
        return std::numbers::pi / 2;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw UsageError(fmt::format("--gamma: expected a number or 'max', got '{}'", text));
    }
    return value;
}

std::pair<int, int> parse_k_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            std::size_t used_a = 0, used_b = 0;
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            const int first = std::stoi(a, &used_a);
            const int last = std::stoi(b, &used_b);
            if (used_a == a.size() && used_b == b.size()) {
                return {first, last};
            }
        }
    } catch (const std::exception&) {
    }
    throw UsageError(fmt::format("--k-range: expected a..b, got '{}'", text));
}

StrategySet strategy_set(const std::string& name)
{
    if (name == "p1p2") return strategy_sets::classical();
    if (name == "p1p2q") return strategy_sets::with_q();
    if (name == "p1p2m") return strategy_sets::with_miracle();
    return strategy_sets::comparison();
}

/// Flag-combination checks; everything here runs before any computation.
void validate(const std::string& command, const Options& o)
{
    if (!o.game) {
        throw UsageError("--game is required");
    }
    const std::string& game = *o.game;
    const bool k_game = is_k_game(game);
    const bool quantum = is_quantum(game);
    const std::string over = o.over.value_or("k");

    if (!k_game && o.n) throw UsageError(fmt::format("--n is not allowed with --game {}", game));
    if (!k_game && o.k) throw UsageError(fmt::format("--k is not allowed with --game {}", game));
    if (!quantum && o.gamma) throw UsageError(fmt::format("--gamma is not allowed with --game {}", game));
    if (!quantum && o.strategies && *o.strategies != "p1p2") {
        throw UsageError(fmt::format("--game {} only supports --strategies p1p2", game));
    }
    if (o.strategies && *o.strategies == "scarpa" && game != "quantum2") {
        throw UsageError("--strategies scarpa is only available with --game quantum2");
    }

    if (command == "sweep") {
        if (over == "k") {
            if (!k_game) throw UsageError("--over k needs --game classicalk or quantumk");
            if (o.k) throw UsageError("--k is not allowed with --over k; use --k-range");
            if (o.gamma_steps) throw UsageError("--gamma-steps is only used with --over gamma");
        } else {
            if (!quantum) throw UsageError("--over gamma needs a quantum game");
            if (o.gamma) throw UsageError("--gamma is not allowed with --over gamma; use --gamma-steps");
            if (o.k_range) throw UsageError("--k-range is only used with --over k");
            if (k_game && !o.k) throw UsageError("--over gamma with --game quantumk needs --k");
        }
    } else if (k_game && !o.k) {
        throw UsageError(fmt::format("--game {} needs --k", game));
    }
}

GameSpec make_spec(const Options& o)
{
    const std::string& game = *o.game;
    GameSpec spec;
    spec.variant = is_k_game(game) ? Variant::KPerson : Variant::TwoPerson;
    spec.mode = is_quantum(game) ? Mode::Quantum : Mode::Classical;
    if (spec.variant == Variant::KPerson) {
        spec.n = o.n.value_or(10);
        spec.k = o.k.value_or(0);
    }
    if (spec.mode == Mode::Quantum) {
        spec.gamma = EntanglementParam(parse_gamma(o.gamma.value_or("max")));
        spec.strategies = strategy_set(o.strategies.value_or("p1p2m"));
    }
    spec.validate();
    return spec;
}

std::string single_point_csv(const GameSpec& spec, const MetricsReport& r)
{
    SweepSeries s;
    const bool k_game = spec.variant == Variant::KPerson;
    s.axis = k_game ? "k" : "gamma";
    s.points.push_back({0.0, k_game ? std::to_string(spec.k) : fmt::format("{}", spec.gamma.gamma()), r});
    return to_csv(s);
}

std::string run_matrix(const Options& o)
{
    const GameSpec spec = make_spec(o);
    const CostBimatrix m = build_bimatrix(spec);
    if (o.format == "json") return to_json(m).dump(2) + "\n";
    if (o.format == "csv") return to_csv(m);
    return to_table(m);
}

std::string run_solve(const Options& o)
{
    const GameSpec spec = make_spec(o);
    const CostBimatrix m = build_bimatrix(spec);
    const EquilibriumResult eq = solve_equilibria(m);
    const MetricsReport r = report(spec, eq, default_convention(spec.variant));
    if (o.format == "json") {
        nlohmann::json j{{"game",
                          {{"variant", std::string(to_string(spec.variant))},
                           {"mode", std::string(to_string(spec.mode))},
                           {"n", spec.n},
                           {"k", spec.variant == Variant::KPerson ? nlohmann::json(spec.k) : nlohmann::json(nullptr)},
                           {"gamma", spec.gamma.gamma()},
                           {"strategies", m.labels()}}},
                         {"matrix", to_json(m)},
                         {"equilibria", to_json(eq)},
                         {"metrics", to_json(r)}};
        return j.dump(2) + "\n";
    }
    if (o.format == "csv") return single_point_csv(spec, r);
    return to_table(m) + "\n" + to_table(eq, r);
}

std::string run_sweep(const Options& o)
{
    GameSpec base = make_spec(o);
    const SweepOptions options{o.parallel};
    SweepSeries series;
    if (o.over.value_or("k") == "k") {
        const auto [first, last] = o.k_range ? parse_k_range(*o.k_range) : std::pair{1, base.n - 3};
        base.k = first >= 0 && first < base.n - 2 ? first : 0;
        series = sweep_k(base, first, last, options);
    } else {
        series = sweep_gamma(base, even_gamma_samples(o.gamma_steps.value_or(9)), options);
    }
    if (o.format == "json") return to_json(series).dump(2) + "\n";
    if (o.format == "csv") return to_csv(series);
    return to_table(series);
}

std::pair<std::string, bool> run_verify()
{
    std::string text;
    bool all = true;
    int passed = 0;
    const auto items = run_verification();
    for (const auto& item : items) {
        all = all && item.passed;
        passed += item.passed ? 1 : 0;
        text += item.passed ? fmt::format("PASS  {}\n", item.name)
                            : fmt::format("FAIL  {}: {}\n", item.name, item.detail);
    }
    text += fmt::format("{}/{} checks passed\n", passed, items.size());
    return {text, all};
}

void emit(const std::optional<std::string>& path, const std::string& payload, std::ostream& out)
{
    if (!path) {
        out << payload;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        throw DomainError("out", fmt::format("cannot open '{}' for writing", *path));
    }
    file << payload;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pigou network games: classical and EWL-quantum cost matrices, equilibria, PoS/PoA", "qpigou"};
    app.require_subcommand(1);

    Options o;
    auto* matrix = app.add_subcommand("matrix", "print the cost bimatrix");
    add_common(matrix, o);
    matrix->add_option("--k", o.k, "fixed travellers on P2 (k-person games)");

    auto* solve = app.add_subcommand("solve", "equilibria and PoS/PoA report");
    add_common(solve, o);
    solve->add_option("--k", o.k, "fixed travellers on P2 (k-person games)");

    auto* sweep = app.add_subcommand("sweep", "metrics over a range of k or gamma");
    add_common(sweep, o);
    sweep->add_option("--k", o.k, "fixed travellers on P2 (gamma sweeps of k-person games)");
    sweep->add_option("--k-range", o.k_range, "k range as a..b (default 1..n-3)");
    sweep->add_option("--over", o.over, "k | gamma")->check(CLI::IsMember({"k", "gamma"}));
    sweep->add_option("--gamma-steps", o.gamma_steps, "samples over [0, pi/2] for --over gamma (default 9)");
    sweep->add_flag("--parallel", o.parallel, "evaluate sweep points concurrently");

    auto* verify = app.add_subcommand("verify", "replay the reference reproduction checks");
    verify->add_option("--out", o.out, "write the report to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (verify->parsed()) {
            const auto [text, all] = run_verify();
            emit(o.out, text, out);
            return all ? kSuccess : kVerificationFailed;
        }
        const std::string command = matrix->parsed() ? "matrix" : solve->parsed() ? "solve" : "sweep";
        validate(command, o);
        const std::string payload = command == "matrix" ? run_matrix(o) : command == "solve" ? run_solve(o) : run_sweep(o);
        emit(o.out, payload, out);
        return kSuccess;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace qpigou::cli
