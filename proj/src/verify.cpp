#include "qpigou/verify.hpp"

#include "qpigou/equilibrium.hpp"
#include "qpigou/ewl.hpp"
#include "qpigou/game.hpp"
#include "qpigou/metrics.hpp"
#include "qpigou/sweep.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <functional>
#include <set>

namespace qpigou {

namespace {

/// Collects the first failed expectation of one item.
class Expect
{
public:
    void that(bool condition, const std::string& what)
    {
        if (!condition && failure_.empty()) failure_ = what;
    }
    void equal(const Number& got, const Number& want, const std::string& what)
    {
        that(got == want, fmt::format("{}: got {}, want {}", what, got.to_string(), want.to_string()));
    }
    void near(double got, double want, double tol, const std::string& what)
    {
        that(std::abs(got - want) <= tol, fmt::format("{}: got {}, want {} +/- {}", what, got, want, tol));
    }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

using Cells = std::vector<std::vector<std::pair<Number, Number>>>;

void expect_cells(Expect& e, const CostBimatrix& m, const Cells& want, const std::string& what)
{
    e.that(m.size() == want.size(), what + ": wrong dimension");
    for (std::size_t r = 0; r < want.size() && r < m.size(); ++r) {
        for (std::size_t c = 0; c < want.size() && c < m.size(); ++c) {
            const auto cell = fmt::format("{} cell ({},{})", what, m.label(r), m.label(c));
            e.equal(m.alice(r, c), want[r][c].first, cell + " alice");
            e.equal(m.bob(r, c), want[r][c].second, cell + " bob");
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
    std::vector<int> out;
    std::optional<Number> best;
    for (const auto& p : s.points) {
        if (p.metrics.cost_ne && (!best || *p.metrics.cost_ne < *best)) best = *p.metrics.cost_ne;
    }
    for (const auto& p : s.points) {
        if (p.metrics.cost_ne && best && *p.metrics.cost_ne == *best) out.push_back(static_cast<int>(p.value));
    }
    return out;
}

Number frac(std::int64_t a, std::int64_t b) { return Number(a, b); }

// Published values for the k sweeps at n = 10, k = 1..7.
constexpr std::array<double, 7> kClassicalSweep{7.9, 7.6, 7.5, 7.6, 7.9, 8.4, 9.1};
constexpr std::array<double, 7> kQSweepPrinted{8.38, 7.78, 7.38, 7.176, 7.177, 7.38, 7.78};
constexpr std::array<double, 7> kMSweep{8.35, 7.75, 7.35, 7.15, 7.15, 7.35, 7.75};

} // namespace

std::vector<VerifyItem> run_verification()
{
    std::vector<std::pair<std::string, std::function<void(Expect&)>>> items;

    items.emplace_back("classical two-player matrix", [](Expect& e) {
        const auto m = classical_bimatrix(GameSpec::classical_two_person());
        expect_cells(e, m, {{{1, 1}, {1, frac(1, 2)}}, {{frac(1, 2), 1}, {1, 1}}}, "classical2");
        const auto eq = solve_equilibria(m);
        const auto r = report(GameSpec::classical_two_person(), eq, OptConvention::PerGame);
        e.that(eq.selected && eq.selected->label() == "pure:(P2,P2)", "selected equilibrium is not (P2,P2)");
        e.that(r.cost_ne && *r.cost_ne == Number(2), "cost(NE) != 2");
        e.equal(r.cost_opt, frac(3, 2), "cost(OPT)");
        e.that(r.pos && *r.pos == frac(4, 3) && r.poa && *r.poa == frac(4, 3), "PoS/PoA != 4/3");
    });

    items.emplace_back("quantum two-player matrix, strategy Q", [](Expect& e) {
        const auto spec = GameSpec::quantum_two_person(strategy_sets::with_q());
        const auto m = quantum_bimatrix(spec);
        const Number h = frac(1, 2);
        expect_cells(e, m, {{{1, 1}, {1, h}, {1, 1}}, {{h, 1}, {1, 1}, {1, h}}, {{1, 1}, {h, 1}, {1, 1}}}, "Q2");
        const auto opt = optimal_outcome(m);
        e.that(labels(opt.cells) == std::set<std::string>{"(P1,P2)", "(P2,P1)", "(P2,Q)", "(Q,P2)"},
               "optimal cells differ from the four expected");
        e.equal(opt.total, frac(3, 2), "cost(OPT)");
        const auto dom = dominance_select(m);
        e.that(dom && dom->label() == "(Q,Q)", "dominance selection is not (Q,Q)");
        const auto r = report(spec, solve_equilibria(m), OptConvention::PerGame);
        e.that(r.cost_ne && *r.cost_ne == Number(2), "cost(NE) != 2");
        e.that(r.pos && *r.pos == frac(4, 3) && r.poa && *r.poa == frac(4, 3), "PoS/PoA != 4/3");
    });

    items.emplace_back("quantum two-player matrix, strategy M", [](Expect& e) {
        const auto spec = GameSpec::quantum_two_person(strategy_sets::with_miracle());
        const auto m = quantum_bimatrix(spec);
        const Number h = frac(1, 2), q = frac(3, 4), s = frac(7, 8);
        expect_cells(e, m, {{{1, 1}, {1, h}, {1, q}}, {{h, 1}, {1, 1}, {1, q}}, {{q, 1}, {q, 1}, {s, s}}}, "M2");
        const auto eq = solve_equilibria(m);
        e.that(labels(eq.strict_pure) == std::set<std::string>{"(M,M)"}, "strict pure NE is not {(M,M)}");
        const auto r = report(spec, eq, OptConvention::PerGame);
        e.that(r.cost_ne && *r.cost_ne == frac(7, 4), "cost(NE) != 7/4");
        e.equal(r.cost_opt, frac(3, 2), "cost(OPT)");
        e.that(r.pos && *r.pos == frac(7, 6) && r.poa && *r.poa == frac(7, 6), "PoS/PoA != 7/6");
    });

    items.emplace_back("quantum k-player matrices, closed forms (n=10, k=1..7)", [](Expect& e) {
        const int n = 10;
        for (int k = 1; k <= 7; ++k) {
            const Number one(1), a = frac(k + 1, n), b = frac(k + 2, n);
            const auto mq = quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_q()));
            expect_cells(e, mq, {{{one, one}, {one, a}, {b, b}}, {{a, one}, {b, b}, {one, a}}, {{b, b}, {a, one}, {one, one}}},
                         fmt::format("Q k={}", k));
            const Number x = frac(n + k + 2, 2 * n), y = frac(2 * k + 3, 2 * n), z = frac(2 * n + 2 * k + 3, 4 * n);
            const auto mm = quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_miracle()));
            expect_cells(e, mm, {{{one, one}, {one, a}, {x, y}}, {{a, one}, {b, b}, {x, y}}, {{y, x}, {y, x}, {z, z}}},
                         fmt::format("M k={}", k));
        }
    });

    items.emplace_back("EWL outcome, (P1,P1) maximally entangled", [](Expect& e) {
        const auto d = ewl_outcomes(resolve(StrategyTag::P1), resolve(StrategyTag::P1), EntanglementParam::maximal());
        const std::array<Rational, 4> want{Rational(1), Rational(0), Rational(0), Rational(0)};
        for (std::size_t o = 0; o < 4; ++o) {
            const auto snapped = snap_probability(d[o]);
            e.that(snapped && *snapped == want[o], fmt::format("P{} = {}", o, d[o]));
        }
    });

    items.emplace_back("EWL outcome and cost, (M,M) with n=10, k=1", [](Expect& e) {
        const auto d = ewl_outcomes(resolve(StrategyTag::M), resolve(StrategyTag::M), EntanglementParam::maximal());
        for (std::size_t o = 0; o < 4; ++o) {
            const auto snapped = snap_probability(d[o]);
            e.that(snapped && *snapped == Rational(1, 4), fmt::format("P{} = {}", o, d[o]));
        }
        const auto spec = GameSpec::quantum_k_person(10, 1, strategy_sets::with_miracle());
        const auto m = quantum_bimatrix(spec);
        e.equal(m.alice(2, 2), frac(5, 8), "alice cost");
        e.equal(m.bob(2, 2), frac(5, 8), "bob cost");
        const Number total = total_cost(m.at(2, 2), SocialCostModel::fixed_load(10, 1));
        e.equal(total, frac(167, 20), "cost(NE)");
        const auto r = report(spec, solve_equilibria(m), OptConvention::GlobalOverK, std::pair{1, 7});
        e.that(r.pos.has_value(), "PoS unset");
        if (r.pos) e.near(r.pos->value(), 1.17, 0.005, "PoS");
    });

    items.emplace_back("mixed equilibrium, strategy Q with n=10", [](Expect& e) {
        const int n = 10;
        const auto spec = GameSpec::quantum_k_person(n, 1, strategy_sets::with_q());
        const auto mixed = mixed_nash(quantum_bimatrix(spec));
        std::size_t full = 0;
        for (const auto& p : mixed.profiles) {
            if (p.alice_support().size() == 3 && p.bob_support().size() == 3) {
                ++full;
                e.that(p.alice == std::vector<Number>{frac(7, 29), frac(7, 29), frac(15, 29)}, "alice mix");
                e.that(p.bob == std::vector<Number>{frac(7, 29), frac(7, 29), frac(15, 29)}, "bob mix");
                e.equal(p.cost_alice, frac(37, 58), "alice expected cost");
                e.equal(p.cost_bob, frac(37, 58), "bob expected cost");
                const Number total = total_cost({p.cost_alice, p.cost_bob}, SocialCostModel::fixed_load(n, 1));
                e.near(total.value(), 8.38, 0.005, "cost(NE)");
            }
        }
        e.that(full == 1, fmt::format("{} full-support profiles, want 1", full));
        for (int k = 1; k <= 7; ++k) {
            const auto all = mixed_nash(quantum_bimatrix(spec.with_k(k))).profiles;
            const Number p1 = frac(n - k - 2, 4 * (n - k - 2) + 1);
            e.that(all.size() == 1 && all[0].alice[0] == p1 && all[0].alice[1] == p1 && all[0].bob[0] == p1,
                   fmt::format("closed-form P1 probability mismatch at k={}", k));
        }
    });

    items.emplace_back("classical k sweep (n=10)", [](Expect& e) {
        const auto s = sweep_k(GameSpec::classical_k_person(10, 1), 1, 7);
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const auto& m = s.points[i].metrics;
            e.that(m.cost_ne && *m.cost_ne == Number(classical_cost_ne(10, static_cast<int>(i) + 1)),
                   fmt::format("cost(NE) at k={}", i + 1));
            e.that(m.cost_ne && std::abs(m.cost_ne->value() - kClassicalSweep[i]) < 1e-12,
                   fmt::format("cost(NE) at k={} differs from {}", i + 1, kClassicalSweep[i]));
        }
        e.that(argmin_k(s) == std::vector<int>{3}, "argmin is not {3}");
        const auto& at3 = s.points[2].metrics;
        e.that(at3.pos && *at3.pos == Number(1) && at3.poa && *at3.poa == Number(1), "PoS/PoA at k=3 != 1");
    });

    items.emplace_back("quantum k sweep, strategy Q (n=10)", [](Expect& e) {
        const auto s = sweep_k(GameSpec::quantum_k_person(10, 1, strategy_sets::with_q()), 1, 7);
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const auto& m = s.points[i].metrics;
            e.that(m.cost_ne.has_value(), fmt::format("no equilibrium at k={}", i + 1));
            if (m.cost_ne) e.near(m.cost_ne->value(), kQSweepPrinted[i], 5e-3, fmt::format("cost(NE) at k={}", i + 1));
        }
        e.that(argmin_k(s) == std::vector<int>{4}, "argmin is not {4}");
        e.that(s.points[3].metrics.equilibrium == "mixed:(4/17,4/17,9/17)", "k=4 equilibrium is not (4/17,4/17,9/17)");
    });

    items.emplace_back("quantum k sweep, strategy M (n=10)", [](Expect& e) {
        const auto base = GameSpec::quantum_k_person(10, 1, strategy_sets::with_miracle());
        const auto s = sweep_k(base, 1, 7);
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            const auto& m = s.points[i].metrics;
            const Number want = Number(static_cast<std::int64_t>(std::llround(kMSweep[i] * 100)), 100);
            e.that(m.cost_ne && *m.cost_ne == want, fmt::format("cost(NE) at k={}", k));
            const auto strict = pure_nash(quantum_bimatrix(base.with_k(k)), NashKind::Strict);
            e.that(labels(strict) == std::set<std::string>{"(M,M)"}, fmt::format("strict NE at k={}", k));
        }
        e.that(argmin_k(s) == std::vector<int>{4, 5}, "argmin is not {4,5}");
        for (int idx : {3, 4}) {
            const auto& m = s.points[static_cast<std::size_t>(idx)].metrics;
            e.that(m.pos && *m.pos == Number(1) && m.poa && *m.poa == Number(1), "PoS/PoA != 1 at k=4,5");
        }
    });

    std::vector<VerifyItem> out;
    for (auto& [name, check] : items) {
        Expect e;
        try {
            check(e);
        } catch (const std::exception& ex) {
            e.that(false, std::string("exception: ") + ex.what());
        }
        out.push_back({name, e.failure().empty(), e.failure()});
    }
    return out;
}

} // namespace qpigou
