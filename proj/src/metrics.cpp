#include "qpigou/metrics.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace qpigou {

namespace {

void check_fixed_players(int n, int k)
{
    if (n < 3) {
        throw DomainError("n", fmt::format("need n >= 3, got {}", n));
    }
    if (k < 0 || k >= n - 2) {
        throw DomainError("k", fmt::format("need 0 <= k < n-2 = {}, got {}", n - 2, k));
    }
}

} // namespace

SocialCostModel SocialCostModel::fixed_load(int n, int k)
{
    check_fixed_players(n, k);
    return {n, k, Number(Rational(k * k, n) + Rational(n - k - 2))};
}

SocialCostModel SocialCostModel::realized_load(int n, int k, const Number& expected_free_on_p2)
{
    check_fixed_players(n, k);
    const Number load = Number(k) + expected_free_on_p2;
    return {n, k, Number(k) * load / Number(n) + Number(n - k - 2)};
}

Number total_cost(const CostPair& costs, const std::optional<SocialCostModel>& model)
{
    Number total = costs.alice + costs.bob;
    if (model) {
        total += model->fixed_player_cost;
    }
    return total;
}

Rational classical_cost_ne(int n, int k)
{
    check_fixed_players(n, k);
    return Rational((k + 2) * (k + 2), n) + Rational(n - k - 2);
}

Rational classical_pos_poa(int n, int k)
{
    check_fixed_players(n, k);
    return Rational(4 * (k * k - (n - 4) * k + n * n - 2 * n + 4), 3 * n * n);
}

ClassicalOpt classical_opt(int n)
{
    if (n < 2) {
        throw DomainError("n", fmt::format("need n >= 2, got {}", n));
    }
    const Rational half(n, 2);
    return {half, split_cost(n, half)};
}

Rational split_cost(int n, const Rational& p)
{
    if (n < 1) {
        throw DomainError("n", "need n >= 1");
    }
    const Rational on_p2 = Rational(n) - p;
    return p + on_p2 * on_p2 / Rational(n);
}

std::string_view to_string(OptConvention c) { return c == OptConvention::PerGame ? "per-game" : "global-over-k"; }

OptConvention default_convention(Variant v)
{
    return v == Variant::TwoPerson ? OptConvention::PerGame : OptConvention::GlobalOverK;
}

std::optional<SocialCostModel> social_cost_model(const GameSpec& spec, const Equilibrium& eq)
{
    if (spec.variant == Variant::TwoPerson) {
        return std::nullopt;
    }
    if (spec.mode == Mode::Quantum) {
        return SocialCostModel::fixed_load(spec.n, spec.k);
    }
    Number on_p2(0);
    for (std::size_t i = 0; i < spec.strategies.size(); ++i) {
        if (spec.strategies[i].tag() == StrategyTag::P2) {
            on_p2 += eq.alice_probability(i) + eq.bob_probability(i);
        }
    }
    return SocialCostModel::realized_load(spec.n, spec.k, on_p2);
}

Number social_cost(const GameSpec& spec, const Equilibrium& eq)
{
    return total_cost(eq.costs, social_cost_model(spec, eq));
}

Number per_game_opt(const GameSpec& spec, const CostBimatrix& m)
{
    std::optional<Number> best;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            const Equilibrium cell{make_profile(m, r, c), m.at(r, c)};
            const Number cost = social_cost(spec, cell);
            if (!best || cost < *best) {
                best = cost;
            }
        }
    }
    return *best;
}

GlobalOpt global_opt_over_k(const GameSpec& spec, int k_first, int k_last)
{
    if (spec.variant != Variant::KPerson) {
        throw DomainError("variant", "optimum over k needs a k-person game");
    }
    if (k_first > k_last) {
        throw DomainError("k_range", fmt::format("empty range {}..{}", k_first, k_last));
    }
    std::vector<std::pair<int, Number>> costs;
    for (int k = k_first; k <= k_last; ++k) {
        const GameSpec at_k = spec.with_k(k);
        const EquilibriumResult eq = solve_equilibria(build_bimatrix(at_k));
        if (eq.selected) {
            costs.emplace_back(k, social_cost(at_k, *eq.selected));
        }
    }
    if (costs.empty()) {
        throw DomainError("k_range", "no k in range has a selected equilibrium");
    }
    GlobalOpt out{costs.front().second, {}};
    for (const auto& [k, cost] : costs) {
        if (cost < out.cost) out.cost = cost;
    }
    for (const auto& [k, cost] : costs) {
        if (cost == out.cost) out.attained_at.push_back(k);
    }
    return out;
}

MetricsReport report_against(const GameSpec& spec, const EquilibriumResult& eq, const Number& cost_opt,
                             OptConvention convention)
{
    MetricsReport out;
    out.cost_opt = cost_opt;
    out.convention = convention;
    if (spec.variant == Variant::KPerson) {
        out.k = spec.k;
    }
    if (eq.selected) {
        out.cost_ne = social_cost(spec, *eq.selected);
        out.equilibrium = eq.selected->label();
    }
    for (const auto& e : eq.reference_set) {
        out.equilibrium_costs.push_back(social_cost(spec, e));
    }
    if (!out.equilibrium_costs.empty()) {
        const auto [lo, hi] = std::minmax_element(out.equilibrium_costs.begin(), out.equilibrium_costs.end());
        out.pos = *lo / cost_opt;
        out.poa = *hi / cost_opt;
    }
    return out;
}

MetricsReport report(const GameSpec& spec, const EquilibriumResult& eq, OptConvention convention,
                     std::optional<std::pair<int, int>> k_range)
{
    if (convention == OptConvention::PerGame) {
        return report_against(spec, eq, per_game_opt(spec, build_bimatrix(spec)), convention);
    }
    const auto [first, last] = k_range.value_or(std::pair{0, spec.n - 3});
    const GlobalOpt opt = global_opt_over_k(spec, first, last);
    MetricsReport out = report_against(spec, eq, opt.cost, convention);
    out.opt_attained_at = opt.attained_at;
    return out;
}

} // namespace qpigou
