#include "qpigou/game.hpp"

#include "qpigou/errors.hpp"
#include "qpigou/kernels/ewl_batch.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace qpigou {

std::string_view to_string(Variant v) { return v == Variant::TwoPerson ? "two-person" : "k-person"; }
std::string_view to_string(Mode m) { return m == Mode::Classical ? "classical" : "quantum"; }

GameSpec GameSpec::classical_two_person() { return GameSpec{}; }

GameSpec GameSpec::classical_k_person(int n, int k)
{
    GameSpec spec;
    spec.variant = Variant::KPerson;
    spec.n = n;
    spec.k = k;
    spec.validate();
    return spec;
}

GameSpec GameSpec::quantum_two_person(StrategySet strategies, EntanglementParam gamma)
{
    GameSpec spec;
    spec.mode = Mode::Quantum;
    spec.gamma = gamma;
    spec.strategies = std::move(strategies);
    spec.validate();
    return spec;
}

GameSpec GameSpec::quantum_k_person(int n, int k, StrategySet strategies, EntanglementParam gamma)
{
    GameSpec spec;
    spec.variant = Variant::KPerson;
    spec.mode = Mode::Quantum;
    spec.n = n;
    spec.k = k;
    spec.gamma = gamma;
    spec.strategies = std::move(strategies);
    spec.validate();
    return spec;
}

void GameSpec::validate() const
{
    if (variant == Variant::TwoPerson) {
        if (n != 2) {
            throw DomainError("n", "the two-person game has n = 2");
        }
    } else {
        if (n < 3) {
            throw DomainError("n", fmt::format("k-person game needs n >= 3, got {}", n));
        }
        if (k < 0 || k >= n - 2) {
            throw DomainError("k", fmt::format("need 0 <= k < n-2 = {}, got {}", n - 2, k));
        }
    }
    if (strategies.empty()) {
        throw DomainError("strategies", "strategy list is empty");
    }
    if (mode == Mode::Classical) {
        const bool ok = std::all_of(strategies.begin(), strategies.end(),
                                    [](const NamedStrategy& s) { return s.is_classical(); });
        if (!ok) {
            throw DomainError("strategies", "classical games allow only P1 and P2");
        }
    }
}

GameSpec GameSpec::with_k(int new_k) const
{
    GameSpec copy = *this;
    copy.k = new_k;
    copy.validate();
    return copy;
}

GameSpec GameSpec::with_gamma(EntanglementParam g) const
{
    GameSpec copy = *this;
    copy.gamma = g;
    return copy;
}

CostAssignment cost_assignment(const GameSpec& spec)
{
    spec.validate();
    if (spec.variant == Variant::TwoPerson) {
        // Alone on P2 costs 1/2; sharing it costs 2/2.
        return {{{Rational(1), Rational(1), Rational(1, 2), Rational(1)}},
                {{Rational(1), Rational(1, 2), Rational(1), Rational(1)}}};
    }
    const Rational alone(spec.k + 1, spec.n);
    const Rational shared(spec.k + 2, spec.n);
    return {{{Rational(1), Rational(1), alone, shared}}, {{Rational(1), alone, Rational(1), shared}}};
}

CostBimatrix::CostBimatrix(std::vector<std::string> labels, std::vector<CostPair> cells)
    : labels_(std::move(labels)), cells_(std::move(cells))
{
    if (labels_.empty()) {
        throw DomainError("labels", "bimatrix needs at least one strategy");
    }
    if (cells_.size() != labels_.size() * labels_.size()) {
        throw DomainError("cells", fmt::format("expected {} cells, got {}", labels_.size() * labels_.size(),
                                               cells_.size()));
    }
    for (const auto& cell : cells_) {
        if (!(cell.alice > Number(0)) || !(cell.bob > Number(0))) {
            throw DomainError("cells", "costs must be positive");
        }
    }
}

bool CostBimatrix::is_exact() const
{
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const CostPair& c) { return c.alice.is_exact() && c.bob.is_exact(); });
}

namespace {

std::vector<std::string> labels_of(const StrategySet& strategies)
{
    std::vector<std::string> labels;
    labels.reserve(strategies.size());
    for (const auto& s : strategies) {
        labels.push_back(s.label());
    }
    return labels;
}

Number expected_cost(const PlayerCosts& costs, const OutcomeDistribution& dist, bool snap)
{
    if (snap) {
        Rational total(0);
        bool exact = true;
        for (std::size_t o = 0; o < 4 && exact; ++o) {
            const auto p = snap_probability(dist[o]);
            if (p) {
                total += *p * costs.by_outcome[o];
            } else {
                exact = false;
            }
        }
        if (exact) {
            return Number(total);
        }
    }
    double total = 0.0;
    for (std::size_t o = 0; o < 4; ++o) {
        total += dist[o] * to_double(costs.by_outcome[o]);
    }
    return Number::inexact(total);
}

} // namespace

CostBimatrix classical_bimatrix(const GameSpec& spec)
{
    if (spec.mode != Mode::Classical) {
        throw DomainError("mode", "classical_bimatrix needs a classical game");
    }
    const CostAssignment costs = cost_assignment(spec);
    std::vector<CostPair> cells;
    for (const auto& row : spec.strategies) {
        for (const auto& col : spec.strategies) {
            const std::size_t a = row.tag() == StrategyTag::P2 ? 1 : 0;
            const std::size_t b = col.tag() == StrategyTag::P2 ? 1 : 0;
            cells.push_back({Number(costs.alice.by_outcome[2 * a + b]), Number(costs.bob.by_outcome[2 * a + b])});
        }
    }
    return {labels_of(spec.strategies), std::move(cells)};
}

CostBimatrix quantum_bimatrix(const GameSpec& spec)
{
    if (spec.mode != Mode::Quantum) {
        throw DomainError("mode", "quantum_bimatrix needs a quantum game");
    }
    const CostAssignment costs = cost_assignment(spec);

    std::vector<Mat2> unitaries;
    for (const auto& s : spec.strategies) {
        Mat2 u = resolve(s);
        if (!is_unitary(u, 1e-9)) {
            throw DomainError("strategies", fmt::format("strategy {} is not unitary", s.label()));
        }
        unitaries.push_back(u);
    }

    kernels::StrategyPairBatch pairs;
    pairs.reserve(unitaries.size() * unitaries.size());
    for (const auto& ua : unitaries) {
        for (const auto& ub : unitaries) {
            pairs.push_back(ua, ub);
        }
    }
    kernels::OutcomeBatch outcomes;
    kernels::ewl_outcomes_batch(pairs, spec.gamma, outcomes);

    std::vector<CostPair> cells;
    cells.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const OutcomeDistribution dist = outcomes.at(i);
        cells.push_back({expected_cost(costs.alice, dist, true), expected_cost(costs.bob, dist, true)});
    }
    return {labels_of(spec.strategies), std::move(cells)};
}

CostBimatrix build_bimatrix(const GameSpec& spec)
{
    return spec.mode == Mode::Classical ? classical_bimatrix(spec) : quantum_bimatrix(spec);
}

} // namespace qpigou
