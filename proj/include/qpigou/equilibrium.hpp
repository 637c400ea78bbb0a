#pragma once

// Equilibria of cost bimatrices (both players minimize).

#include "qpigou/game.hpp"
#include "qpigou/number.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qpigou {

struct PureProfile
{
    std::size_t row = 0;
    std::size_t col = 0;
    std::string row_label;
    std::string col_label;

    /// "(row,col)"
    std::string label() const;

    friend bool operator==(const PureProfile&, const PureProfile&) = default;
};

PureProfile make_profile(const CostBimatrix& m, std::size_t row, std::size_t col);

struct MixedProfile
{
    std::vector<Number> alice;
    std::vector<Number> bob;
    Number cost_alice;
    Number cost_bob;

    std::vector<std::size_t> alice_support() const;
    std::vector<std::size_t> bob_support() const;
    bool is_pure() const { return alice_support().size() == 1 && bob_support().size() == 1; }

    /// "mixed:(p1,p2,...)" for symmetric profiles, "mixed:(alice)/(bob)" otherwise.
    std::string label() const;
};

enum class NashKind { Strict, Weak };

/// A cell is a weak NE iff no unilateral deviation strictly lowers the
/// deviator's cost, strict iff every deviation strictly raises it.
/// Row-major order.
std::vector<PureProfile> pure_nash(const CostBimatrix& m, NashKind kind);

/// Iterated elimination of weakly dominated strategies. Each round finds the
/// dominated rows and columns against the strategies alive at the start of
/// the round, then removes them. Returns the surviving cell if exactly one
/// survives.
std::optional<PureProfile> dominance_select(const CostBimatrix& m);

struct MixedNashResult
{
    std::vector<MixedProfile> profiles;
    /// Support pairs skipped because their indifference system was singular.
    std::vector<std::string> diagnostics;
};

/// Support enumeration over every pair of nonempty supports (size <= 3).
/// Exact for exact matrices. Duplicates are merged; results are sorted by
/// (alice support, bob support, alice probs, bob probs).
MixedNashResult mixed_nash(const CostBimatrix& m);

struct OptimalOutcome
{
    std::vector<PureProfile> cells;
    Number total;
};

/// All cells minimizing alice + bob cost.
OptimalOutcome optimal_outcome(const CostBimatrix& m);

enum class Selection { Dominance, StrictPure, Mixed };

std::string_view to_string(Selection s);

/// A pure cell or a mixed profile, with each player's (expected) cost.
struct Equilibrium
{
    std::variant<PureProfile, MixedProfile> profile;
    CostPair costs;

    bool is_pure() const { return std::holds_alternative<PureProfile>(profile); }

    /// "pure:(M,M)" or "mixed:(...)".
    std::string label() const;

    /// Probability that Alice (Bob) plays strategy index i.
    Number alice_probability(std::size_t i) const;
    Number bob_probability(std::size_t i) const;
};

struct EquilibriumResult
{
    std::vector<PureProfile> strict_pure;
    std::vector<PureProfile> weak_pure;
    std::vector<MixedProfile> mixed;
    std::vector<std::string> diagnostics;

    /// Dominance-selected cell, else the unique strict pure NE, else the
    /// unique mixed NE.
    std::optional<Equilibrium> selected;
    std::optional<Selection> selection;

    /// Equilibria that price-of-stability/anarchy range over: the dominance
    /// cell if any, else all strict pure NE, else all mixed NE.
    std::vector<Equilibrium> reference_set;
};

EquilibriumResult solve_equilibria(const CostBimatrix& m);

} // namespace qpigou
