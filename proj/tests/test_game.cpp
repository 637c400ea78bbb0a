#include "qpigou/errors.hpp"
#include "qpigou/game.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace qpigou;
using qpigou::testing::frac;

namespace {

void check_symmetric(const CostBimatrix& m)
{
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) CHECK(m.bob(r, c) == m.alice(c, r));
}

} // namespace

TEST_CASE("cost assignment")
{
    const auto two = cost_assignment(GameSpec::classical_two_person());
    CHECK(two.alice.by_outcome == std::array<Rational, 4>{1, 1, Rational(1, 2), 1});
    CHECK(two.bob.by_outcome == std::array<Rational, 4>{1, Rational(1, 2), 1, 1});

    const auto k1 = cost_assignment(GameSpec::classical_k_person(10, 1));
    CHECK(k1.alice.by_outcome == std::array<Rational, 4>{1, 1, Rational(1, 5), Rational(3, 10)});
    CHECK(k1.bob.by_outcome == std::array<Rational, 4>{1, Rational(1, 5), 1, Rational(3, 10)});

    const auto k0 = cost_assignment(GameSpec::classical_k_person(5, 0));
    CHECK(k0.alice.c10() == Rational(1, 5));
    CHECK(k0.alice.c11() == Rational(2, 5));
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(GameSpec::classical_k_person(10, 8), DomainError);
    CHECK_THROWS_AS(GameSpec::classical_k_person(10, -1), DomainError);
    CHECK_THROWS_AS(GameSpec::classical_k_person(2, 0), DomainError);
    CHECK_NOTHROW(GameSpec::classical_k_person(10, 7));
    CHECK_NOTHROW(GameSpec::classical_k_person(3, 0));

    GameSpec two = GameSpec::classical_two_person();
    two.n = 3;
    CHECK_THROWS_AS(two.validate(), DomainError);

    GameSpec classical_q = GameSpec::classical_two_person();
    classical_q.strategies = strategy_sets::with_q();
    CHECK_THROWS_AS(classical_q.validate(), DomainError);

    GameSpec empty = GameSpec::quantum_two_person(strategy_sets::with_q());
    empty.strategies.clear();
    CHECK_THROWS_AS(empty.validate(), DomainError);

    CHECK_THROWS_AS(GameSpec::classical_k_person(10, 1).with_k(9), DomainError);
}

TEST_CASE("classical bimatrices")
{
    const auto m = classical_bimatrix(GameSpec::classical_two_person());
    REQUIRE(m.size() == 2);
    CHECK(m.labels() == std::vector<std::string>{"P1", "P2"});
    CHECK(m.at(0, 0) == CostPair{1, 1});
    CHECK(m.at(0, 1) == CostPair{1, frac(1, 2)});
    CHECK(m.at(1, 0) == CostPair{frac(1, 2), 1});
    CHECK(m.at(1, 1) == CostPair{1, 1});
    CHECK(m.is_exact());

    const auto mk = classical_bimatrix(GameSpec::classical_k_person(10, 1));
    CHECK(mk.at(0, 1) == CostPair{1, frac(1, 5)});
    CHECK(mk.at(1, 1) == CostPair{frac(3, 10), frac(3, 10)});

    CHECK_THROWS_AS(classical_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_q())), DomainError);
}

TEST_CASE("quantum two-person bimatrices")
{
    const auto q = quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_q()));
    REQUIRE(q.size() == 3);
    CHECK(q.is_exact());
    CHECK(q.at(0, 0) == CostPair{1, 1});
    CHECK(q.at(0, 2) == CostPair{1, 1});
    CHECK(q.at(1, 2) == CostPair{1, frac(1, 2)});
    CHECK(q.at(2, 2) == CostPair{1, 1});

    const auto m = quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_miracle()));
    CHECK(m.at(0, 2) == CostPair{1, frac(3, 4)});
    CHECK(m.at(1, 2) == CostPair{1, frac(3, 4)});
    CHECK(m.at(2, 2) == CostPair{frac(7, 8), frac(7, 8)});
}

TEST_CASE("gamma = 0 reduces to the classical game")
{
    for (auto spec : {GameSpec::classical_two_person(), GameSpec::classical_k_person(5, 1),
                      GameSpec::classical_k_person(10, 4), GameSpec::classical_k_person(20, 17)}) {
        GameSpec quantum = spec;
        quantum.mode = Mode::Quantum;
        quantum.gamma = EntanglementParam::none();
        CHECK(quantum_bimatrix(quantum) == classical_bimatrix(spec));
    }

    // (M,M) with no entanglement: each qubit ends in M|0>, so every outcome
    // has probability |1/sqrt2|^2 * |1/sqrt2|^2 = 1/4. Alice's cost is then
    // (1 + 1 + 1/2 + 1)/4 = 7/8.
    const auto m = quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::with_miracle(), EntanglementParam::none()));
    CHECK(m.at(2, 2) == CostPair{frac(7, 8), frac(7, 8)});
}

TEST_CASE("closed forms of the k-person games")
{
    for (int n : {5, 10, 20}) {
        for (int k = 0; k <= n - 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const Number one(1), a = frac(k + 1, n), b = frac(k + 2, n);
            const auto q = quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_q()));
            CHECK(q.at(0, 0) == CostPair{one, one});
            CHECK(q.at(0, 1) == CostPair{one, a});
            CHECK(q.at(0, 2) == CostPair{b, b});
            CHECK(q.at(1, 1) == CostPair{b, b});
            CHECK(q.at(1, 2) == CostPair{one, a});
            CHECK(q.at(2, 2) == CostPair{one, one});

            const auto m = quantum_bimatrix(GameSpec::quantum_k_person(n, k, strategy_sets::with_miracle()));
            const Number x = frac(n + k + 2, 2 * n), y = frac(2 * k + 3, 2 * n), z = frac(2 * n + 2 * k + 3, 4 * n);
            CHECK(m.at(0, 2) == CostPair{x, y});
            CHECK(m.at(1, 2) == CostPair{x, y});
            CHECK(m.at(2, 0) == CostPair{y, x});
            CHECK(m.at(2, 2) == CostPair{z, z});
        }
    }
}

TEST_CASE("generated games are symmetric")
{
    std::mt19937_64 rng(3);
    for (int n : {5, 10, 20}) {
        for (int k = 0; k <= n - 3; ++k) {
            check_symmetric(classical_bimatrix(GameSpec::classical_k_person(n, k)));
            for (const auto& set : {strategy_sets::with_q(), strategy_sets::with_miracle()}) {
                for (double gamma : {0.0, std::numbers::pi / 2, testing::random_gamma(rng)}) {
                    check_symmetric(quantum_bimatrix(GameSpec::quantum_k_person(n, k, set, EntanglementParam(gamma))));
                }
            }
        }
    }
    check_symmetric(quantum_bimatrix(GameSpec::quantum_two_person(strategy_sets::comparison())));
}

TEST_CASE("intermediate gamma is inexact and matches the dense outcomes")
{
    const double gamma = 0.6;
    const auto spec = GameSpec::quantum_two_person(strategy_sets::with_miracle(), EntanglementParam(gamma));
    const auto m = quantum_bimatrix(spec);
    CHECK_FALSE(m.is_exact());
    const auto costs = cost_assignment(spec);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const auto d = testing::naive_outcomes(resolve(spec.strategies[r]), resolve(spec.strategies[c]), gamma);
            double alice = 0.0;
            for (std::size_t o = 0; o < 4; ++o) alice += d[o] * to_double(costs.alice.by_outcome[o]);
            CHECK(std::abs(m.alice(r, c).value() - alice) < 1e-12);
        }
    }
}

TEST_CASE("bimatrix validation")
{
    CHECK_THROWS_AS(CostBimatrix({"A"}, {}), DomainError);
    CHECK_THROWS_AS(CostBimatrix({"A"}, {CostPair{0, 1}}), DomainError);
    CHECK_NOTHROW(CostBimatrix({"A"}, {CostPair{1, 1}}));
}
