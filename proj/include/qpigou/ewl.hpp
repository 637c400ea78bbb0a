#pragma once

// Two-qubit EWL protocol: |00> -> J(gamma) -> U_A (x) U_B -> J(gamma)^dagger,
// then measurement in the computational basis.
//
// The entangler uses J(gamma) = exp(-i (gamma/2) P2 (x) P2), so gamma = pi/2 is
// maximal entanglement and gives the 1/sqrt(2), -i/sqrt(2) operator. Writing
// exp(-i gamma P2 (x) P2) instead would not reproduce the published cost tables.

#include "qpigou/linalg.hpp"

#include <array>

namespace qpigou {

/// Entanglement strength gamma in [0, pi/2]; 0 is a product state, pi/2 maximal.
class EntanglementParam
{
public:
    explicit EntanglementParam(double gamma);

    static EntanglementParam none() { return EntanglementParam(0.0); }
    static EntanglementParam maximal();

    double gamma() const noexcept { return gamma_; }

    friend bool operator==(const EntanglementParam&, const EntanglementParam&) = default;

private:
    double gamma_;
};

/// Measurement probabilities P_{ab}, a = Alice's bit, b = Bob's bit.
struct OutcomeDistribution
{
    double p00 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p11 = 0.0;

    double operator[](std::size_t index) const;
    std::array<double, 4> as_array() const { return {p00, p01, p10, p11}; }
    double total() const { return p00 + p01 + p10 + p11; }
};

/// cos(gamma/2) I - i sin(gamma/2) P2 (x) P2. Exact closed form of the
/// exponential because (P2 (x) P2)^2 = I.
Mat4 entangler(EntanglementParam g);

/// J^dagger (ua (x) ub) J |00>. Inputs must be unitary within 1e-9.
StateVector4 ewl_final_state(const Mat2& ua, const Mat2& ub, EntanglementParam g);

OutcomeDistribution ewl_outcomes(const Mat2& ua, const Mat2& ub, EntanglementParam g);

} // namespace qpigou
