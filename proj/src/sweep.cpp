#include "qpigou/sweep.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <future>
#include <numbers>

namespace qpigou {

namespace {

/// Runs fn(i) for i in [0, count) and returns results in index order.
template <class Fn>
auto evaluate_all(std::size_t count, bool parallel, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> out;
    out.reserve(count);
    if (!parallel) {
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(fn(i));
        }
        return out;
    }
    std::vector<std::future<Result>> pending;
    pending.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        pending.push_back(std::async(std::launch::async, fn, i));
    }
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    return out;
}

std::vector<std::string> labels_of(const StrategySet& strategies)
{
    std::vector<std::string> out;
    for (const auto& s : strategies) {
        out.push_back(s.label());
    }
    return out;
}

} // namespace

SweepSeries sweep_k(const GameSpec& base, int k_first, int k_last, SweepOptions options)
{
    if (base.variant != Variant::KPerson) {
        throw DomainError("variant", "k sweeps need a k-person game");
    }
    if (k_first > k_last) {
        throw DomainError("k_range", fmt::format("empty range {}..{}", k_first, k_last));
    }
    if (k_first < 0 || k_last > base.n - 3) {
        throw DomainError("k_range", fmt::format("range {}..{} is outside 0..{}", k_first, k_last, base.n - 3));
    }

    struct Solved
    {
        GameSpec spec;
        EquilibriumResult eq;
    };
    const auto count = static_cast<std::size_t>(k_last - k_first + 1);
    const std::vector<Solved> solved = evaluate_all(count, options.parallel, [&](std::size_t i) {
        GameSpec spec = base.with_k(k_first + static_cast<int>(i));
        EquilibriumResult eq = solve_equilibria(build_bimatrix(spec));
        return Solved{std::move(spec), std::move(eq)};
    });

    std::optional<Number> opt;
    std::vector<int> attained;
    for (const auto& s : solved) {
        if (s.eq.selected) {
            const Number cost = social_cost(s.spec, *s.eq.selected);
            if (!opt || cost < *opt) opt = cost;
        }
    }
    if (!opt) {
        throw DomainError("k_range", "no k in range has a selected equilibrium");
    }
    for (const auto& s : solved) {
        if (s.eq.selected && social_cost(s.spec, *s.eq.selected) == *opt) {
            attained.push_back(s.spec.k);
        }
    }

    SweepSeries series;
    series.axis = "k";
    series.variant = base.variant;
    series.mode = base.mode;
    series.strategies = labels_of(base.strategies);
    series.n = base.n;
    if (base.mode == Mode::Quantum) {
        series.gamma = base.gamma.gamma();
    }
    for (const auto& s : solved) {
        SweepPoint point;
        point.value = s.spec.k;
        point.value_text = std::to_string(s.spec.k);
        point.metrics = report_against(s.spec, s.eq, *opt, OptConvention::GlobalOverK);
        point.metrics.opt_attained_at = attained;
        series.points.push_back(std::move(point));
    }
    return series;
}

SweepSeries sweep_gamma(const GameSpec& base, const std::vector<double>& gammas, SweepOptions options)
{
    if (base.mode != Mode::Quantum) {
        throw DomainError("mode", "gamma sweeps need a quantum game");
    }
    if (gammas.empty()) {
        throw DomainError("gamma", "no gamma samples");
    }
    std::vector<EntanglementParam> params;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        params.emplace_back(gammas[i]);
        if (i > 0 && !(gammas[i] > gammas[i - 1])) {
            throw DomainError("gamma", "samples must be strictly increasing");
        }
    }
    base.validate();

    const OptConvention convention = default_convention(base.variant);
    std::vector<SweepPoint> points = evaluate_all(params.size(), options.parallel, [&](std::size_t i) {
        const GameSpec spec = base.with_gamma(params[i]);
        const EquilibriumResult eq = solve_equilibria(build_bimatrix(spec));
        return SweepPoint{params[i].gamma(), fmt::format("{}", params[i].gamma()), report(spec, eq, convention)};
    });

    SweepSeries series;
    series.axis = "gamma";
    series.variant = base.variant;
    series.mode = base.mode;
    series.strategies = labels_of(base.strategies);
    series.n = base.n;
    if (base.variant == Variant::KPerson) {
        series.k = base.k;
    }
    series.points = std::move(points);
    return series;
}

std::vector<double> even_gamma_samples(int count)
{
    if (count < 2) {
        throw DomainError("gamma_steps", "need at least 2 samples");
    }
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(i == count - 1 ? std::numbers::pi / 2 : (std::numbers::pi / 2) * i / (count - 1));
    }
    return out;
}

} // namespace qpigou
