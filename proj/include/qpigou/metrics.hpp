#pragma once

// Social cost, cost(NE), cost(OPT), price of stability and price of anarchy.

#include "qpigou/equilibrium.hpp"
#include "qpigou/game.hpp"
#include "qpigou/number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpigou {

/// Total cost of the n-2 travellers whose path is fixed (k on P2, n-k-2 on P1).
///
/// Two billing conventions for the k fixed P2 users are supported:
///  - FixedLoad charges each of them k/n, i.e. cl = k*k/n + (n-k-2). This is
///    the convention behind the quantum k-person results (e.g. 8.35 at k=1).
///  - RealizedLoad charges each of them the actual P2 load (k + x)/n, where x
///    is the (expected) number of free players on P2. For the classical
///    equilibrium (P2,P2) this reproduces (k+2)^2/n + (n-k-2).
enum class FixedCostConvention { FixedLoad, RealizedLoad };

struct SocialCostModel
{
    int n = 0;
    int k = 0;
    Number fixed_player_cost;

    /// Requires n >= 3 and 0 <= k < n-2.
    static SocialCostModel fixed_load(int n, int k);
    static SocialCostModel realized_load(int n, int k, const Number& expected_free_on_p2);
};

/// costA + costB + cl (cl = 0 without a model, i.e. two-person games).
Number total_cost(const CostPair& costs, const std::optional<SocialCostModel>& model = std::nullopt);

/// (k+2)^2/n + (n-k-2); requires 0 <= k < n-2.
Rational classical_cost_ne(int n, int k);

/// 4[k^2 - (n-4)k + n^2 - 2n + 4] / (3n^2), the closed form of
/// classical_cost_ne(n, k) / (3n/4).
Rational classical_pos_poa(int n, int k);

struct ClassicalOpt
{
    Rational split; // travellers on P1
    Rational cost;
};

/// Equal split p = n/2 with cost 3n/4; requires n >= 2.
ClassicalOpt classical_opt(int n);

/// Total cost when p travellers use P1 and n-p use P2: p + (n-p)^2/n.
Rational split_cost(int n, const Rational& p);

enum class OptConvention { PerGame, GlobalOverK };

std::string_view to_string(OptConvention c);

/// PerGame for two-person games, GlobalOverK for k-person games.
OptConvention default_convention(Variant v);

/// Social-cost model for a game and a particular (possibly mixed) outcome:
/// none for TwoPerson, FixedLoad for Quantum, RealizedLoad for Classical.
std::optional<SocialCostModel> social_cost_model(const GameSpec& spec, const Equilibrium& eq);

/// Social cost of an equilibrium (all n players).
Number social_cost(const GameSpec& spec, const Equilibrium& eq);

struct MetricsReport
{
    std::optional<Number> cost_ne;
    Number cost_opt;
    std::optional<Number> pos;
    std::optional<Number> poa;
    std::optional<int> k;
    OptConvention convention = OptConvention::PerGame;
    std::string equilibrium = "none";
    /// Social costs of the reference equilibria, in solver order.
    std::vector<Number> equilibrium_costs;
    /// GlobalOverK only: the k values attaining cost_opt.
    std::vector<int> opt_attained_at;
};

/// Minimum social cost over the cells of the spec's own bimatrix.
Number per_game_opt(const GameSpec& spec, const CostBimatrix& m);

struct GlobalOpt
{
    Number cost;
    std::vector<int> attained_at;
};

/// Minimum selected-equilibrium social cost over k in [k_first, k_last].
/// Throws DomainError if no k in the range has a selected equilibrium.
GlobalOpt global_opt_over_k(const GameSpec& spec, int k_first, int k_last);

/// Fills the report given an already computed cost_opt.
MetricsReport report_against(const GameSpec& spec, const EquilibriumResult& eq, const Number& cost_opt,
                             OptConvention convention);

/// GlobalOverK ranges over k in {0..n-3} unless k_range is given.
MetricsReport report(const GameSpec& spec, const EquilibriumResult& eq, OptConvention convention,
                     std::optional<std::pair<int, int>> k_range = std::nullopt);

} // namespace qpigou
