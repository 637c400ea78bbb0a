#pragma once

// Parameter sweeps over k (fixed n) or gamma, one metrics report per point.

#include "qpigou/game.hpp"
#include "qpigou/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpigou {

struct SweepPoint
{
    double value = 0.0;
    /// Axis value as printed ("3", "0.7853981633974483").
    std::string value_text;
    MetricsReport metrics;
};

struct SweepSeries
{
    std::string axis; // "k" or "gamma"
    Variant variant = Variant::KPerson;
    Mode mode = Mode::Classical;
    std::vector<std::string> strategies;
    int n = 0;
    std::optional<int> k;        // gamma sweeps of k-person games
    std::optional<double> gamma; // quantum k sweeps
    std::vector<SweepPoint> points;
};

struct SweepOptions
{
    /// Evaluate points concurrently; output order and content are unchanged.
    bool parallel = false;
};

/// Sweeps base.k over [k_first, k_last] (a subset of {0..n-3}). cost_opt is
/// the GlobalOverK optimum over the requested range.
SweepSeries sweep_k(const GameSpec& base, int k_first, int k_last, SweepOptions options = {});

/// Sweeps gamma over the given samples (each in [0, pi/2], strictly
/// increasing) for a quantum game. Uses default_convention(base.variant).
SweepSeries sweep_gamma(const GameSpec& base, const std::vector<double>& gammas, SweepOptions options = {});

/// count >= 2 evenly spaced samples from 0 to pi/2 inclusive.
std::vector<double> even_gamma_samples(int count);

} // namespace qpigou
