#pragma once

#include "qpigou/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpigou {

/// Angles of the two-parameter strategy family. theta in [0, pi],
/// phi in [0, pi/2], both inclusive.
class StrategyAngles
{
public:
    /// Throws DomainError naming "theta" or "phi" when out of range.
    StrategyAngles(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    friend bool operator==(const StrategyAngles&, const StrategyAngles&) = default;

private:
    double theta_;
    double phi_;
};

/// Named moves. S1 and S2 are the "path 1" / "path 2" comparison moves,
/// kept out of the default strategy sets.
enum class StrategyTag { P1, P2, Q, M, S1, S2, Custom };

class NamedStrategy
{
public:
    /// Any tag except Custom.
    NamedStrategy(StrategyTag tag);
    static NamedStrategy custom(StrategyAngles angles);

    /// Accepts the canonical labels "P1","P2","Q","M","S1","S2".
    static NamedStrategy parse(std::string_view label);

    StrategyTag tag() const noexcept { return tag_; }
    const std::optional<StrategyAngles>& angles() const noexcept { return angles_; }

    /// Canonical label; custom strategies render as "U(theta,phi)".
    std::string label() const;

    bool is_classical() const noexcept { return tag_ == StrategyTag::P1 || tag_ == StrategyTag::P2; }

    friend bool operator==(const NamedStrategy&, const NamedStrategy&) = default;

private:
    NamedStrategy(StrategyTag tag, std::optional<StrategyAngles> angles);

    StrategyTag tag_;
    std::optional<StrategyAngles> angles_;
};

using StrategySet = std::vector<NamedStrategy>;

/// {{e^{i phi} cos(theta/2), sin(theta/2)}, {-sin(theta/2), e^{-i phi} cos(theta/2)}}
Mat2 unitary_from_angles(const StrategyAngles& angles);

Mat2 resolve(const NamedStrategy& strategy);

namespace strategy_sets {
StrategySet classical();      // P1, P2
StrategySet with_q();         // P1, P2, Q
StrategySet with_miracle();   // P1, P2, M
StrategySet comparison();     // S1, S2
} // namespace strategy_sets

} // namespace qpigou
