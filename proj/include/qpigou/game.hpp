#pragma once

// Cost structures of the two-edge Pigou network: a constant-cost edge
// (path P1, cost 1) and a congestible edge (path P2, cost x/n for load x).
// Alice and Bob are the two free players; in the k-person variant the other
// n-2 travellers are fixed, k of them on P2 and n-k-2 on P1.

#include "qpigou/ewl.hpp"
#include "qpigou/number.hpp"
#include "qpigou/strategy.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qpigou {

enum class Variant { TwoPerson, KPerson };
enum class Mode { Classical, Quantum };

std::string_view to_string(Variant v);
std::string_view to_string(Mode m);

struct GameSpec
{
    Variant variant = Variant::TwoPerson;
    Mode mode = Mode::Classical;
    int n = 2;
    int k = 0;
    EntanglementParam gamma = EntanglementParam::none();
    StrategySet strategies = strategy_sets::classical();

    static GameSpec classical_two_person();
    static GameSpec classical_k_person(int n, int k);
    static GameSpec quantum_two_person(StrategySet strategies,
                                       EntanglementParam gamma = EntanglementParam::maximal());
    static GameSpec quantum_k_person(int n, int k, StrategySet strategies,
                                     EntanglementParam gamma = EntanglementParam::maximal());

    /// Throws DomainError naming the violated field:
    /// KPerson needs 0 <= k < n-2; TwoPerson fixes n = 2;
    /// Classical allows only P1/P2; the strategy list must be nonempty.
    void validate() const;

    GameSpec with_k(int new_k) const;
    GameSpec with_gamma(EntanglementParam g) const;
};

/// One player's cost per measured outcome, indexed 2*alice_bit + bob_bit.
struct PlayerCosts
{
    std::array<Rational, 4> by_outcome;

    const Rational& c00() const { return by_outcome[0]; }
    const Rational& c01() const { return by_outcome[1]; }
    const Rational& c10() const { return by_outcome[2]; }
    const Rational& c11() const { return by_outcome[3]; }
};

struct CostAssignment
{
    PlayerCosts alice;
    PlayerCosts bob;
};

CostAssignment cost_assignment(const GameSpec& spec);

struct CostPair
{
    Number alice;
    Number bob;

    Number total() const { return alice + bob; }

    friend bool operator==(const CostPair&, const CostPair&) = default;
};

/// Square cost bimatrix, Alice on rows and Bob on columns. Entries are costs
/// (lower is better) and must be positive.
class CostBimatrix
{
public:
    CostBimatrix(std::vector<std::string> labels, std::vector<CostPair> cells);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    const CostPair& at(std::size_t row, std::size_t col) const { return cells_.at(row * size() + col); }
    const Number& alice(std::size_t row, std::size_t col) const { return at(row, col).alice; }
    const Number& bob(std::size_t row, std::size_t col) const { return at(row, col).bob; }

    /// True iff every entry is an exact rational.
    bool is_exact() const;

    friend bool operator==(const CostBimatrix&, const CostBimatrix&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<CostPair> cells_;
};

/// 2x2 game over the spec's {P1, P2} list. Throws for quantum specs.
CostBimatrix classical_bimatrix(const GameSpec& spec);

/// |S| x |S| game; cell (i, j) weights the outcome distribution of
/// (S_i, S_j) at the spec's gamma by cost_assignment. Cells whose four
/// probabilities all snap to multiples of 1/4 are exact.
CostBimatrix quantum_bimatrix(const GameSpec& spec);

/// classical_bimatrix or quantum_bimatrix by spec.mode.
CostBimatrix build_bimatrix(const GameSpec& spec);

} // namespace qpigou
