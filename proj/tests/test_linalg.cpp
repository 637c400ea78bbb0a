#include "qpigou/ewl.hpp"
#include "qpigou/errors.hpp"
#include "qpigou/linalg.hpp"
#include "qpigou/strategy.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qpigou;
using namespace std::complex_literals;

namespace {

const double kRoot2 = 1.0 / std::numbers::sqrt2;

Mat4 maximal_entangler_literal()
{
    return Mat4{kRoot2, 0, 0, -1i * kRoot2, 0, kRoot2, 1i * kRoot2, 0,
                0, 1i * kRoot2, kRoot2, 0, -1i * kRoot2, 0, 0, kRoot2};
}

} // namespace

TEST_CASE("tensor_product")
{
    CHECK(tensor_product(Mat2::identity(), Mat2::identity()) == Mat4::identity());

    const Mat2 p2 = resolve(StrategyTag::P2);
    const Mat4 pp = tensor_product(p2, p2);
    Mat4 antidiag;
    antidiag(0, 3) = 1.0;
    antidiag(1, 2) = -1.0;
    antidiag(2, 1) = -1.0;
    antidiag(3, 0) = 1.0;
    CHECK(pp == antidiag);

    const Mat2 m = resolve(StrategyTag::M);
    const Mat4 want = Complex(0.5) * Mat4{-1, 1i, 1i, 1, -1i, 1, -1, -1i, -1i, -1, 1, -1i, 1, 1i, 1i, -1};
    CHECK(max_abs_diff(tensor_product(m, m), want) < 1e-12);

    SUBCASE("entry layout")
    {
        const Mat2 a{1, 2, 3, 4};
        const Mat2 b{5, 6, 7, 8};
        const Mat4 k = tensor_product(a, b);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s = 0; s < 2; ++s) CHECK(k(2 * i + r, 2 * j + s) == a(i, j) * b(r, s));
    }
}

TEST_CASE("tensor_product is bilinear")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 a{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
        const Mat2 b{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
        const Complex alpha(u(rng), u(rng));
        CHECK(max_abs_diff(tensor_product(alpha * a, b), alpha * tensor_product(a, b)) < 1e-12);
        CHECK(max_abs_diff(tensor_product(a, alpha * b), alpha * tensor_product(a, b)) < 1e-12);
        CHECK(max_abs_diff(tensor_product(a + a, b), tensor_product(a, b) + tensor_product(a, b)) < 1e-12);
    }
}

TEST_CASE("apply")
{
    StateVector4 v;
    v[0] = 0.5;
    v[1] = 0.5i;
    v[2] = -0.5;
    v[3] = Complex(0.3, 0.4) * 0.5 / 0.5 * 0.5;
    const StateVector4 same = apply(Mat4::identity(), v);
    CHECK(same.amplitudes == v.amplitudes);

    const Mat2 p2 = resolve(StrategyTag::P2);
    const StateVector4 flipped = apply(tensor_product(p2, p2), StateVector4::basis(0));
    CHECK(flipped.amplitudes == StateVector4::basis(3).amplitudes);

    const StateVector4 psi = apply(entangler(EntanglementParam::maximal()), StateVector4::basis(0));
    CHECK(std::abs(psi[0] - kRoot2) < 1e-15);
    CHECK(std::abs(psi[1]) < 1e-15);
    CHECK(std::abs(psi[2]) < 1e-15);
    CHECK(std::abs(psi[3] - (-1i * kRoot2)) < 1e-15);

    CHECK_THROWS_AS(StateVector4::basis(4), DomainError);
}

TEST_CASE("dagger")
{
    CHECK(dagger(Mat4::identity()) == Mat4::identity());

    const Mat4 disentangler{kRoot2, 0, 0, 1i * kRoot2, 0, kRoot2, -1i * kRoot2, 0,
                            0, -1i * kRoot2, kRoot2, 0, 1i * kRoot2, 0, 0, kRoot2};
    CHECK(max_abs_diff(dagger(maximal_entangler_literal()), disentangler) == 0.0);
    CHECK(max_abs_diff(dagger(entangler(EntanglementParam::maximal())), disentangler) < 1e-15);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat4 m = tensor_product(testing::random_unitary(rng), testing::random_unitary(rng)) *
                       entangler(EntanglementParam(testing::random_gamma(rng)));
        CHECK(dagger(dagger(m)) == m);
    }
}

TEST_CASE("is_unitary")
{
    CHECK(is_unitary(Mat2::identity(), 1e-12));
    CHECK(is_unitary(Mat4::identity(), 1e-12));
    CHECK(is_unitary(unitary_from_angles({0.7, 0.3}), 1e-12));

    Mat4 bad = Mat4::identity();
    bad(0, 0) = 2.0;
    CHECK_FALSE(is_unitary(bad, 1e-12));
    Mat2 bad2 = Mat2::identity();
    bad2(0, 0) = 2.0;
    CHECK_FALSE(is_unitary(bad2, 1e-12));

    CHECK_THROWS_AS(is_unitary(Mat2::identity(), 0.0), DomainError);
    CHECK_THROWS_AS(is_unitary(Mat2::identity(), -1.0), DomainError);
}

TEST_CASE("unitarity and norm preservation over random draws")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const StrategyAngles a = testing::random_angles(rng);
        CHECK(is_unitary(unitary_from_angles(a), 1e-12));

        const Mat4 m = dagger(entangler(EntanglementParam(testing::random_gamma(rng)))) *
                       tensor_product(testing::random_unitary(rng), unitary_from_angles(a));
        StateVector4 v;
        std::normal_distribution<double> g;
        for (auto& amp : v.amplitudes) amp = Complex(g(rng), g(rng));
        const double norm = std::sqrt(v.norm_squared());
        for (auto& amp : v.amplitudes) amp /= norm;
        CHECK(std::abs(apply(m, v).norm_squared() - 1.0) < 1e-12);
    }
}

TEST_CASE("determinant and finiteness")
{
    CHECK(determinant(Mat2{1, 2, 3, 4}) == Complex(-2.0));
    CHECK_THROWS_AS((Mat2{std::nan(""), 0, 0, 1}), DomainError);
    CHECK_THROWS_AS((Mat2{1, 0, 0}), DomainError);
}
