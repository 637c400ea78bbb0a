#include "qpigou/strategy.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace qpigou {

StrategyAngles::StrategyAngles(double theta, double phi) : theta_(theta), phi_(phi)
{
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("theta", fmt::format("{} is outside [0, pi]", theta));
    }
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2)) {
        throw DomainError("phi", fmt::format("{} is outside [0, pi/2]", phi));
    }
}

NamedStrategy::NamedStrategy(StrategyTag tag, std::optional<StrategyAngles> angles)
    : tag_(tag), angles_(angles)
{
}

NamedStrategy::NamedStrategy(StrategyTag tag) : NamedStrategy(tag, std::nullopt)
{
    if (tag == StrategyTag::Custom) {
        throw DomainError("tag", "custom strategies need angles; use NamedStrategy::custom");
    }
}

NamedStrategy NamedStrategy::custom(StrategyAngles angles) { return {StrategyTag::Custom, angles}; }

NamedStrategy NamedStrategy::parse(std::string_view label)
{
    if (label == "P1") return StrategyTag::P1;
    if (label == "P2") return StrategyTag::P2;
    if (label == "Q") return StrategyTag::Q;
    if (label == "M") return StrategyTag::M;
    if (label == "S1") return StrategyTag::S1;
    if (label == "S2") return StrategyTag::S2;
    throw DomainError("strategy", fmt::format("unknown strategy label '{}'", label));
}

std::string NamedStrategy::label() const
{
    switch (tag_) {
    case StrategyTag::P1: return "P1";
    case StrategyTag::P2: return "P2";
    case StrategyTag::Q: return "Q";
    case StrategyTag::M: return "M";
    case StrategyTag::S1: return "S1";
    case StrategyTag::S2: return "S2";
    case StrategyTag::Custom: break;
    }
    return fmt::format("U({},{})", angles_->theta(), angles_->phi());
}

Mat2 unitary_from_angles(const StrategyAngles& angles)
{
    const double c = std::cos(angles.theta() / 2);
    const double s = std::sin(angles.theta() / 2);
    const Complex phase = std::polar(1.0, angles.phi());
    return Mat2{phase * c, s, -s, std::conj(phase) * c};
}

Mat2 resolve(const NamedStrategy& strategy)
{
    using namespace std::complex_literals;
    const double h = 1.0 / std::numbers::sqrt2;
    switch (strategy.tag()) {
    case StrategyTag::P1: return Mat2::identity();
    case StrategyTag::P2: return Mat2{0.0, 1.0, -1.0, 0.0};
    case StrategyTag::Q: return Mat2{1i, 0.0, 0.0, -1i};
    case StrategyTag::M: return Mat2{h * 1i, h, -h, -h * 1i};
    case StrategyTag::S1: return Mat2{-1i, 0.0, 0.0, 1i};
    case StrategyTag::S2: return Mat2{0.0, -1i, -1i, 0.0};
    case StrategyTag::Custom: break;
    }
    return unitary_from_angles(*strategy.angles());
}

namespace strategy_sets {

StrategySet classical() { return {StrategyTag::P1, StrategyTag::P2}; }
StrategySet with_q() { return {StrategyTag::P1, StrategyTag::P2, StrategyTag::Q}; }
StrategySet with_miracle() { return {StrategyTag::P1, StrategyTag::P2, StrategyTag::M}; }
StrategySet comparison() { return {StrategyTag::S1, StrategyTag::S2}; }

} // namespace strategy_sets

} // namespace qpigou
