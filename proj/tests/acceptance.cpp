// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Optional argv[1]: path of the qpigou binary, used for the determinism check.

#include "qpigou/cli.hpp"
#include "qpigou/equilibrium.hpp"
#include "qpigou/ewl.hpp"
#include "qpigou/game.hpp"
#include "qpigou/metrics.hpp"
#include "qpigou/sweep.hpp"

#include "test_support.hpp"

#include <fmt/format.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace qpigou;
using qpigou::testing::frac;

namespace {

// Tolerances.
constexpr double kPrintedTol = 5e-3;     // two-decimal printed values
constexpr double kUnitTol = 1e-12;       // unitarity and normalization
constexpr double kOracleSlack = 1e-9;    // grid best-response check
constexpr int kOracleSteps = 200;        // grid resolution 1/200

struct Failure
{
    std::string what;
};

void require(bool condition, const std::string& what)
{
    if (!condition) throw Failure{what};
}

void require_equal(const Number& got, const Number& want, const std::string& what)
{
    require(got == want, fmt::format("{}: got {}, want {}", what, got.to_string(), want.to_string()));
}

void require_near(double got, double want, double tol, const std::string& what)
{
    require(std::abs(got - want) <= tol, fmt::format("{}: got {}, want {} +/- {}", what, got, want, tol));
}

using Grid = std::vector<std::vector<std::pair<Number, Number>>>;

void require_cells(const CostBimatrix& m, const Grid& want, const std::string& what)
{
    require(m.size() == want.size(), what + ": dimension");
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            const auto cell = fmt::format("{} ({},{})", what, m.label(r), m.label(c));
            require_equal(m.alice(r, c), want[r][c].first, cell + " alice");
            require_equal(m.bob(r, c), want[r][c].second, cell + " bob");
        }
    }
}

std::set<std::string> labels(const std::vector<PureProfile>& ps)
{
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.label());
    return out;
}

std::vector<int> argmin_k(const SweepSeries& s)
{
    std::optional<Number> best;
    for (const auto& p : s.points) {
        require(p.metrics.cost_ne.has_value(), fmt::format("no equilibrium at k={}", p.value_text));
        if (!best || *p.metrics.cost_ne < *best) best = *p.metrics.cost_ne;
    }
    std::vector<int> out;
    for (const auto& p : s.points)
        if (*p.metrics.cost_ne == *best) out.push_back(static_cast<int>(p.value));
    return out;
}

MetricsReport default_report(const GameSpec& spec)
{
    return report(spec, solve_equilibria(build_bimatrix(spec)), default_convention(spec.variant));
}

std::string binary_path;

std::string capture(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "popen failed for " + command);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    require(pclose(pipe) == 0, "nonzero exit from " + command);
    return out;
}

// ---------------------------------------------------------------------------

void classical_two_person_matrix()
{
    const auto m = classical_bimatrix(GameSpec::classical_two_person());
    require_cells(m, {{{1, 1}, {1, frac(1, 2)}}, {{frac(1, 2), 1}, {1, 1}}}, "classical2");
}

void q_two_person_game()
{
    const auto spec = GameSpec::quantum_two_person(strategy_sets::with_q());
    const auto m = quantum_bimatrix(spec);
    const Number h = frac(1, 2);
    require_cells(m, {{{1, 1}, {1, h}, {1, 1}}, {{h, 1}, {1, 1}, {1, h}}, {{1, 1}, {h, 1}, {1, 1}}}, "P1,P2,Q");
    require(labels(optimal_outcome(m).cells) == std::set<std::string>{"(P1,P2)", "(P2,P1)", "(P2,Q)", "(Q,P2)"},
            "optimal cells");
    const auto dom = dominance_select(m);
    require(dom && dom->label() == "(Q,Q)", "dominance selection is not (Q,Q)");
    const auto r = default_report(spec);
    require_equal(r.cost_ne.value_or(Number(-1)), Number(2), "cost(NE)");
    require_equal(r.pos.value_or(Number(-1)), frac(4, 3), "PoS");
    require_equal(r.poa.value_or(Number(-1)), frac(4, 3), "PoA");
}

void m_two_person_game()
{
    const auto spec = GameSpec::quantum_two_person(strategy_sets::with_miracle());
    const auto m = quantum_bimatrix(spec);
    const Number h = frac(1, 2), q = frac(3, 4), s = frac(7, 8);
    require_cells(m, {{{1, 1}, {1, h}, {1, q}}, {{h, 1}, {1, 1}, {1, q}}, {{q, 1}, {q, 1}, {s, s}}}, "P1,P2,M");
    require(labels(pure_nash(m, NashKind::Strict)) == std::set<std::string>{"(M,M)"}, "strict pure NE");
    const auto r = default_report(spec);
    require_equal(r.cost_ne.value_or(Number(-1)), frac(7, 4), "cost(NE)");
    require_equal(r.cost_opt, frac(3, 2), "cost(OPT)");
    require_equal(r.pos.value_or(Number(-1)), frac(7, 6), "PoS");
    require_equal(r.poa.value_or(Number(-1)), frac(7, 6), "PoA");
}

void k_person_closed_forms()
{
    const int n = 10;
    for (int k = 1; k <= 7; ++k) {
        const Number one(1), a = frac(k + 1, n), b = frac(k + 2, n);
        require_cells(quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_q())),
                      {{{one, one}, {one, a}, {b, b}}, {{a, one}, {b, b}, {one, a}}, {{b, b}, {a, one}, {one, one}}},
                      fmt::format("Q k={}", k));
        const Number x = frac(n + k + 2, 2 * n), y = frac(2 * k + 3, 2 * n), z = frac(2 * n + 2 * k + 3, 4 * n);
        require_cells(quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_miracle())),
                      {{{one, one}, {one, a}, {x, y}}, {{a, one}, {b, b}, {x, y}}, {{y, x}, {y, x}, {z, z}}},
                      fmt::format("M k={}", k));
    }
}

void outcome_vectors()
{
    const auto g = EntanglementParam::maximal();
    const auto pp = ewl_outcomes(resolve(StrategyTag::P1), resolve(StrategyTag::P1), g);
    const std::array<Rational, 4> want_pp{1, 0, 0, 0};
    const auto mm = ewl_outcomes(resolve(StrategyTag::M), resolve(StrategyTag::M), g);
    for (std::size_t o = 0; o < 4; ++o) {
        require(snap_probability(pp[o]) == want_pp[o], fmt::format("(P1,P1) P{} = {}", o, pp[o]));
        require(snap_probability(mm[o]) == Rational(1, 4), fmt::format("(M,M) P{} = {}", o, mm[o]));
    }
    const auto spec = GameSpec::quantum_k_person(10, 1, strategy_sets::with_miracle());
    const auto m = quantum_bimatrix(spec);
    require(m.at(2, 2) == CostPair{frac(5, 8), frac(5, 8)}, "(M,M) costs");
    const auto r = default_report(spec);
    require_equal(r.cost_ne.value_or(Number(-1)), frac(835, 100), "total");
    require_near(r.pos.value_or(Number(-1)).value(), 1.17, kPrintedTol, "PoS");
    require_near(r.poa.value_or(Number(-1)).value(), 1.17, kPrintedTol, "PoA");
}

void q_mixed_equilibrium()
{
    const int n = 10;
    const auto spec = GameSpec::quantum_k_person(n, 1, strategy_sets::with_q());
    const auto profiles = mixed_nash(quantum_bimatrix(spec)).profiles;
    std::vector<MixedProfile> full;
    for (const auto& p : profiles)
        if (p.alice_support().size() == 3 && p.bob_support().size() == 3) full.push_back(p);
    require(full.size() == 1, fmt::format("{} full-support profiles", full.size()));
    const std::vector<Number> want{frac(7, 29), frac(7, 29), frac(15, 29)};
    require(full[0].alice == want && full[0].bob == want, "profile is not (7/29,7/29,15/29)");
    require_equal(full[0].cost_alice, frac(37, 58), "alice cost");
    require_equal(full[0].cost_bob, frac(37, 58), "bob cost");
    const Number total = total_cost({full[0].cost_alice, full[0].cost_bob}, SocialCostModel::fixed_load(n, 1));
    require_near(total.value(), 8.38, kPrintedTol, "total");
    for (int k = 1; k <= 7; ++k) {
        const auto all = mixed_nash(quantum_bimatrix(spec.with_k(k))).profiles;
        require(all.size() == 1, fmt::format("k={}: {} profiles", k, all.size()));
        const Number p1 = frac(n - k - 2, 4 * (n - k - 2) + 1);
        for (const auto* mix : {&all[0].alice, &all[0].bob}) {
            require_equal((*mix)[0], p1, fmt::format("k={} P1 weight", k));
            require_equal((*mix)[1], p1, fmt::format("k={} P2 weight", k));
        }
    }
}

void classical_k_sweep()
{
    const auto s = sweep_k(GameSpec::classical_k_person(10, 1), 1, 7);
    const std::array<std::int64_t, 7> tenths{79, 76, 75, 76, 79, 84, 91};
    for (std::size_t i = 0; i < 7; ++i)
        require_equal(s.points[i].metrics.cost_ne.value_or(Number(-1)), frac(tenths[i], 10),
                      fmt::format("cost(NE) k={}", i + 1));
    require(argmin_k(s) == std::vector<int>{3}, "argmin is not {3}");
    require_equal(s.points[2].metrics.pos.value_or(Number(-1)), Number(1), "PoS at k=3");
    require_equal(s.points[2].metrics.poa.value_or(Number(-1)), Number(1), "PoA at k=3");
}

void q_k_sweep()
{
    const auto s = sweep_k(GameSpec::quantum_k_person(10, 1, strategy_sets::with_q()), 1, 7);
    const std::array<double, 7> printed{8.38, 7.78, 7.38, 7.176, 7.177, 7.38, 7.78};
    for (std::size_t i = 0; i < 7; ++i)
        require_near(s.points[i].metrics.cost_ne.value_or(Number(-1)).value(), printed[i], kPrintedTol,
                     fmt::format("cost(NE) k={}", i + 1));
    require(argmin_k(s) == std::vector<int>{4}, "argmin is not {4}");
    require(s.points[3].metrics.equilibrium == "mixed:(4/17,4/17,9/17)",
            "k=4 equilibrium is " + s.points[3].metrics.equilibrium);
}

void m_k_sweep()
{
    const auto base = GameSpec::quantum_k_person(10, 1, strategy_sets::with_miracle());
    const auto s = sweep_k(base, 1, 7);
    const std::array<std::int64_t, 7> hundredths{835, 775, 735, 715, 715, 735, 775};
    for (int k = 1; k <= 7; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        require_equal(s.points[i].metrics.cost_ne.value_or(Number(-1)), frac(hundredths[i], 100),
                      fmt::format("cost(NE) k={}", k));
        require(labels(pure_nash(quantum_bimatrix(base.with_k(k)), NashKind::Strict)) ==
                    std::set<std::string>{"(M,M)"},
                fmt::format("strict NE at k={}", k));
    }
    require(argmin_k(s) == std::vector<int>{4, 5}, "argmin is not {4,5}");
    for (std::size_t i : {3u, 4u}) {
        require_equal(s.points[i].metrics.pos.value_or(Number(-1)), Number(1), "PoS");
        require_equal(s.points[i].metrics.poa.value_or(Number(-1)), Number(1), "PoA");
    }
}

void properties()
{
    // (a) unitarity and normalization
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        const StrategyAngles a = testing::random_angles(rng), b = testing::random_angles(rng);
        const double gamma = testing::random_gamma(rng);
        const Mat2 ua = unitary_from_angles(a), ub = unitary_from_angles(b);
        require(is_unitary(ua, kUnitTol) && is_unitary(ub, kUnitTol), fmt::format("draw {} not unitary", i));
        const auto d = ewl_outcomes(ua, ub, EntanglementParam(gamma));
        require(std::abs(d.total() - 1.0) <= kUnitTol, fmt::format("draw {} sums to {}", i, d.total()));
    }

    // (b) classical limit, (c) symmetry, (d) grid oracle
    std::vector<CostBimatrix> games;
    for (auto spec : {GameSpec::classical_two_person(), GameSpec::classical_k_person(5, 2),
                      GameSpec::classical_k_person(10, 3), GameSpec::classical_k_person(20, 10)}) {
        GameSpec quantum = spec;
        quantum.mode = Mode::Quantum;
        quantum.gamma = EntanglementParam::none();
        require(quantum_bimatrix(quantum) == classical_bimatrix(spec), "gamma=0 differs from the classical game");
        games.push_back(classical_bimatrix(spec));
    }
    games.push_back(quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_q())));
    games.push_back(quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_miracle())));
    games.push_back(quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::comparison())));
    for (int k = 0; k <= 7; ++k) {
        for (const auto& set : {strategy_sets::with_q(), strategy_sets::with_miracle()}) {
            for (double gamma : {0.0, 0.4, 1.1, std::numbers::pi / 2})
                games.push_back(quantum_bimatrix(GameSpec::quantum_k_person(10, k, set, EntanglementParam(gamma))));
        }
    }
    for (const auto& m : games) {
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c)
                require(m.bob(r, c) == m.alice(c, r), "asymmetric bimatrix");
        for (const auto& p : mixed_nash(m).profiles) {
            require(testing::survives_grid_check(m, p, kOracleSlack), "profile fails the grid check: " + p.label());
        }
    }
    require(kOracleSteps == 200, "grid resolution");

    // (e) closed-form PoS/PoA against cost(NE) / (3n/4), computed here
    for (int n : {5, 10, 20}) {
        for (int k = 0; k <= n - 3; ++k) {
            const Rational eq1 = Rational((k + 2) * (k + 2), n) + Rational(n - k - 2);
            require(classical_pos_poa(n, k) == eq1 / Rational(3 * n, 4), fmt::format("n={} k={}", n, k));
        }
    }
}

void determinism()
{
    const std::vector<std::string> args{"sweep", "--game", "quantumk", "--strategies", "p1p2q",
                                        "--n", "10", "--k-range", "1..7", "--format", "csv"};
    std::string first;
    for (int i = 0; i < 3; ++i) {
        std::ostringstream out, err;
        require(cli::run(args, out, err) == cli::kSuccess, "sweep failed: " + err.str());
        if (i == 0) first = out.str();
        require(out.str() == first, "in-process sweep output differs between runs");
    }
    if (!binary_path.empty()) {
        std::string command = binary_path;
        for (const auto& a : args) command += " " + a;
        const std::string a = capture(command), b = capture(command), c = capture(command + " --parallel");
        require(a == first && b == first && c == first, "sweep binary output differs between invocations");
    }
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1) binary_path = argv[1];

    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"classical two-person bimatrix", classical_two_person_matrix},
        {"quantum two-person game with Q", q_two_person_game},
        {"quantum two-person game with M", m_two_person_game},
        {"k-person closed forms, n=10, k=1..7", k_person_closed_forms},
        {"EWL outcome vectors and (M,M) totals", outcome_vectors},
        {"mixed equilibrium of the Q game", q_mixed_equilibrium},
        {"classical k sweep", classical_k_sweep},
        {"Q k sweep", q_k_sweep},
        {"M k sweep", m_k_sweep},
        {"property suite", properties},
        {"sweep determinism", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, check] = criteria[i];
        std::string detail;
        try {
            check();
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::cout << fmt::format("PASS  {:>2}  {}\n", i + 1, name);
        } else {
            ++failed;
            std::cout << fmt::format("FAIL  {:>2}  {}: {}\n", i + 1, name, detail);
        }
    }
    std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
