#include "qpigou/equilibrium.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>

namespace qpigou {

std::string PureProfile::label() const { return fmt::format("({},{})", row_label, col_label); }

PureProfile make_profile(const CostBimatrix& m, std::size_t row, std::size_t col)
{
    return {row, col, m.label(row), m.label(col)};
}

namespace {

std::vector<std::size_t> support_of(const std::vector<Number>& probs)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > Number(0)) {
            out.push_back(i);
        }
    }
    return out;
}

std::string join_numbers(const std::vector<Number>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + values[i].to_string();
    }
    return out;
}

} // namespace

std::vector<std::size_t> MixedProfile::alice_support() const { return support_of(alice); }
std::vector<std::size_t> MixedProfile::bob_support() const { return support_of(bob); }

std::string MixedProfile::label() const
{
    if (alice.size() == bob.size() && std::equal(alice.begin(), alice.end(), bob.begin())) {
        return fmt::format("mixed:({})", join_numbers(alice));
    }
    return fmt::format("mixed:({})/({})", join_numbers(alice), join_numbers(bob));
}

std::vector<PureProfile> pure_nash(const CostBimatrix& m, NashKind kind)
{
    const std::size_t n = m.size();
    std::vector<PureProfile> out;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            bool ok = true;
            for (std::size_t t = 0; t < n && ok; ++t) {
                if (t == r) continue;
                ok = kind == NashKind::Strict ? m.alice(t, c) > m.alice(r, c) : m.alice(t, c) >= m.alice(r, c);
            }
            for (std::size_t t = 0; t < n && ok; ++t) {
                if (t == c) continue;
                ok = kind == NashKind::Strict ? m.bob(r, t) > m.bob(r, c) : m.bob(r, t) >= m.bob(r, c);
            }
            if (ok) {
                out.push_back(make_profile(m, r, c));
            }
        }
    }
    return out;
}

namespace {

/// cost(own, opponent) for one player.
using CostFn = std::function<const Number&(std::size_t, std::size_t)>;

/// Strategies in `own` weakly dominated by another strategy in `own`,
/// judged against the opponent strategies in `opp`.
std::vector<std::size_t> weakly_dominated(const std::vector<std::size_t>& own, const std::vector<std::size_t>& opp,
                                          const CostFn& cost)
{
    std::vector<std::size_t> out;
    for (std::size_t s : own) {
        for (std::size_t t : own) {
            if (t == s) continue;
            bool never_worse = true;
            bool sometimes_better = false;
            for (std::size_t o : opp) {
                if (cost(t, o) > cost(s, o)) {
                    never_worse = false;
                    break;
                }
                if (cost(t, o) < cost(s, o)) {
                    sometimes_better = true;
                }
            }
            if (never_worse && sometimes_better) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

void erase_all(std::vector<std::size_t>& from, const std::vector<std::size_t>& gone)
{
    std::erase_if(from, [&](std::size_t x) { return std::find(gone.begin(), gone.end(), x) != gone.end(); });
}

} // namespace

std::optional<PureProfile> dominance_select(const CostBimatrix& m)
{
    std::vector<std::size_t> rows(m.size());
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        rows[i] = cols[i] = i;
    }
    const CostFn alice = [&](std::size_t r, std::size_t c) -> const Number& { return m.alice(r, c); };
    const CostFn bob = [&](std::size_t c, std::size_t r) -> const Number& { return m.bob(r, c); };

    for (;;) {
        // Both players are judged against the sets surviving the previous
        // round; rows are then removed before columns.
        const auto dead_rows = weakly_dominated(rows, cols, alice);
        const auto dead_cols = weakly_dominated(cols, rows, bob);
        erase_all(rows, dead_rows);
        erase_all(cols, dead_cols);
        if (dead_rows.empty() && dead_cols.empty()) {
            break;
        }
    }
    if (rows.size() == 1 && cols.size() == 1) {
        return make_profile(m, rows[0], cols[0]);
    }
    return std::nullopt;
}

namespace {

enum class SolveStatus { Unique, Singular, Inconsistent };

/// Gauss-Jordan elimination on an augmented system [A | b].
std::pair<SolveStatus, std::vector<Number>> solve_linear(std::vector<std::vector<Number>> aug, std::size_t unknowns)
{
    const std::size_t rows = aug.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (aug[r][col].is_zero()) continue;
            if (pivot == rows || std::abs(aug[r][col].value()) > std::abs(aug[pivot][col].value())) {
                pivot = r;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(aug[rank], aug[pivot]);
        const Number lead = aug[rank][col];
        for (auto& x : aug[rank]) {
            x = x / lead;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || aug[r][col].is_zero()) continue;
            const Number factor = aug[r][col];
            for (std::size_t c = 0; c <= unknowns; ++c) {
                aug[r][c] -= factor * aug[rank][c];
            }
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (!aug[r][unknowns].is_zero()) {
            return {SolveStatus::Inconsistent, {}};
        }
    }
    if (rank < unknowns) {
        return {SolveStatus::Singular, {}};
    }
    // Each of the first `unknowns` rows now holds one pivot, in column order.
    std::vector<Number> x(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) {
        x[r] = aug[r][unknowns];
    }
    return {SolveStatus::Unique, x};
}

struct Indifference
{
    SolveStatus status;
    std::vector<Number> opponent_probs; // full length
    Number value;
};

/// Opponent mix over opp_support making the player indifferent across
/// own_support; cost(own, opp) is the player's cost.
Indifference solve_indifference(std::size_t n, const std::vector<std::size_t>& own_support,
                                const std::vector<std::size_t>& opp_support, const CostFn& cost)
{
    const std::size_t unknowns = opp_support.size() + 1; // probabilities, then value
    std::vector<std::vector<Number>> aug;
    for (std::size_t i : own_support) {
        std::vector<Number> row(unknowns + 1);
        for (std::size_t t = 0; t < opp_support.size(); ++t) {
            row[t] = cost(i, opp_support[t]);
        }
        row[unknowns - 1] = Number(-1);
        aug.push_back(std::move(row));
    }
    std::vector<Number> normalization(unknowns + 1);
    for (std::size_t t = 0; t < opp_support.size(); ++t) {
        normalization[t] = Number(1);
    }
    normalization[unknowns] = Number(1);
    aug.push_back(std::move(normalization));

    auto [status, x] = solve_linear(std::move(aug), unknowns);
    Indifference out{status, std::vector<Number>(n), Number(0)};
    if (status == SolveStatus::Unique) {
        for (std::size_t t = 0; t < opp_support.size(); ++t) {
            out.opponent_probs[opp_support[t]] = x[t];
        }
        out.value = x[unknowns - 1];
    }
    return out;
}

/// No strategy (in or out of support) is strictly cheaper than `value`.
bool is_best_response(std::size_t n, const std::vector<Number>& opp_probs, const Number& value, const CostFn& cost)
{
    for (std::size_t i = 0; i < n; ++i) {
        Number expected(0);
        for (std::size_t j = 0; j < n; ++j) {
            expected += cost(i, j) * opp_probs[j];
        }
        if (expected < value) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t size = 1; size <= n; ++size) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) subset.push_back(i);
            }
            out.push_back(std::move(subset));
        }
    }
    return out;
}

std::string support_label(const CostBimatrix& m, const std::vector<std::size_t>& support)
{
    std::string out = "{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        out += (i ? "," : "") + m.label(support[i]);
    }
    return out + "}";
}

std::vector<double> values_of(const std::vector<Number>& v)
{
    std::vector<double> out;
    for (const auto& x : v) out.push_back(x.value());
    return out;
}

} // namespace

MixedNashResult mixed_nash(const CostBimatrix& m)
{
    const std::size_t n = m.size();
    if (n > 3) {
        throw DomainError("matrix", fmt::format("support enumeration is limited to 3x3 games, got {}x{}", n, n));
    }
    const CostFn alice = [&](std::size_t r, std::size_t c) -> const Number& { return m.alice(r, c); };
    const CostFn bob = [&](std::size_t c, std::size_t r) -> const Number& { return m.bob(r, c); };

    MixedNashResult result;
    const auto subsets = nonempty_subsets(n);
    for (const auto& sa : subsets) {
        for (const auto& sb : subsets) {
            // Bob's mix keeps Alice indifferent on sa, and vice versa.
            const Indifference for_alice = solve_indifference(n, sa, sb, alice);
            const Indifference for_bob = solve_indifference(n, sb, sa, bob);
            const auto note = [&](const char* who) {
                result.diagnostics.push_back(fmt::format("support {} x {}: singular indifference system for {}",
                                                         support_label(m, sa), support_label(m, sb), who));
            };
            if (for_alice.status == SolveStatus::Singular) note("Alice");
            if (for_bob.status == SolveStatus::Singular) note("Bob");
            if (for_alice.status != SolveStatus::Unique || for_bob.status != SolveStatus::Unique) {
                continue;
            }

            const auto& q = for_alice.opponent_probs;
            const auto& p = for_bob.opponent_probs;
            const auto negative = [](const Number& x) { return x < Number(0); };
            if (std::any_of(p.begin(), p.end(), negative) || std::any_of(q.begin(), q.end(), negative)) {
                continue;
            }
            if (!is_best_response(n, q, for_alice.value, alice) || !is_best_response(n, p, for_bob.value, bob)) {
                continue;
            }

            MixedProfile profile{p, q, for_alice.value, for_bob.value};
            const bool seen = std::any_of(result.profiles.begin(), result.profiles.end(), [&](const MixedProfile& o) {
                return o.alice == profile.alice && o.bob == profile.bob;
            });
            if (!seen) {
                result.profiles.push_back(std::move(profile));
            }
        }
    }

    std::sort(result.profiles.begin(), result.profiles.end(), [](const MixedProfile& x, const MixedProfile& y) {
        return std::make_tuple(x.alice_support(), x.bob_support(), values_of(x.alice), values_of(x.bob)) <
               std::make_tuple(y.alice_support(), y.bob_support(), values_of(y.alice), values_of(y.bob));
    });
    return result;
}

OptimalOutcome optimal_outcome(const CostBimatrix& m)
{
    OptimalOutcome out{{}, m.at(0, 0).total()};
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (m.at(r, c).total() < out.total) {
                out.total = m.at(r, c).total();
            }
        }
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (m.at(r, c).total() == out.total) {
                out.cells.push_back(make_profile(m, r, c));
            }
        }
    }
    return out;
}

std::string_view to_string(Selection s)
{
    switch (s) {
    case Selection::Dominance: return "dominance";
    case Selection::StrictPure: return "strict-pure";
    case Selection::Mixed: return "mixed";
    }
    return "unknown";
}

std::string Equilibrium::label() const
{
    if (const auto* pure = std::get_if<PureProfile>(&profile)) {
        return "pure:" + pure->label();
    }
    return std::get<MixedProfile>(profile).label();
}

Number Equilibrium::alice_probability(std::size_t i) const
{
    if (const auto* pure = std::get_if<PureProfile>(&profile)) {
        return Number(pure->row == i ? 1 : 0);
    }
    return std::get<MixedProfile>(profile).alice.at(i);
}

Number Equilibrium::bob_probability(std::size_t i) const
{
    if (const auto* pure = std::get_if<PureProfile>(&profile)) {
        return Number(pure->col == i ? 1 : 0);
    }
    return std::get<MixedProfile>(profile).bob.at(i);
}

EquilibriumResult solve_equilibria(const CostBimatrix& m)
{
    EquilibriumResult result;
    result.strict_pure = pure_nash(m, NashKind::Strict);
    result.weak_pure = pure_nash(m, NashKind::Weak);
    if (m.size() <= 3) {
        auto mixed = mixed_nash(m);
        result.mixed = std::move(mixed.profiles);
        result.diagnostics = std::move(mixed.diagnostics);
    } else {
        result.diagnostics.push_back("mixed equilibria not searched: game larger than 3x3");
    }

    const auto pure_equilibrium = [&](const PureProfile& p) { return Equilibrium{p, m.at(p.row, p.col)}; };
    const auto mixed_equilibrium = [](const MixedProfile& p) {
        return Equilibrium{p, CostPair{p.cost_alice, p.cost_bob}};
    };

    if (const auto dominant = dominance_select(m)) {
        result.selected = pure_equilibrium(*dominant);
        result.selection = Selection::Dominance;
        result.reference_set = {*result.selected};
    } else if (!result.strict_pure.empty()) {
        for (const auto& p : result.strict_pure) {
            result.reference_set.push_back(pure_equilibrium(p));
        }
        if (result.strict_pure.size() == 1) {
            result.selected = result.reference_set.front();
            result.selection = Selection::StrictPure;
        }
    } else if (!result.mixed.empty()) {
        for (const auto& p : result.mixed) {
            result.reference_set.push_back(mixed_equilibrium(p));
        }
        if (result.mixed.size() == 1) {
            result.selected = result.reference_set.front();
            result.selection = Selection::Mixed;
        }
    }
    return result;
}

} // namespace qpigou
