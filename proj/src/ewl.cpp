#include "qpigou/ewl.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace qpigou {

EntanglementParam::EntanglementParam(double gamma) : gamma_(gamma)
{
    if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2)) {
        throw DomainError("gamma", fmt::format("{} is outside [0, pi/2]", gamma));
    }
}

EntanglementParam EntanglementParam::maximal() { return EntanglementParam(std::numbers::pi / 2); }

double OutcomeDistribution::operator[](std::size_t index) const
{
    switch (index) {
    case 0: return p00;
    case 1: return p01;
    case 2: return p10;
    case 3: return p11;
    default: throw DomainError("index", "outcome index must be in 0..3");
    }
}

Mat4 entangler(EntanglementParam g)
{
    using namespace std::complex_literals;
    const Mat2 p2{0.0, 1.0, -1.0, 0.0};
    const double half = g.gamma() / 2;
    return Complex(std::cos(half)) * Mat4::identity() + (-1i * std::sin(half)) * tensor_product(p2, p2);
}

StateVector4 ewl_final_state(const Mat2& ua, const Mat2& ub, EntanglementParam g)
{
    if (!is_unitary(ua, 1e-9)) {
        throw DomainError("ua", "Alice's strategy is not unitary");
    }
    if (!is_unitary(ub, 1e-9)) {
        throw DomainError("ub", "Bob's strategy is not unitary");
    }
    const Mat4 j = entangler(g);
    const StateVector4 entangled = apply(j, StateVector4::basis(0));
    return apply(dagger(j), apply(tensor_product(ua, ub), entangled));
}

OutcomeDistribution ewl_outcomes(const Mat2& ua, const Mat2& ub, EntanglementParam g)
{
    const StateVector4 psi = ewl_final_state(ua, ub, g);
    return {std::norm(psi[0]), std::norm(psi[1]), std::norm(psi[2]), std::norm(psi[3])};
}

} // namespace qpigou
