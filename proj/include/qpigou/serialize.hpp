#pragma once

// JSON, CSV and aligned-text renderings of bimatrices, equilibria, metrics
// and sweeps.
//
// Numbers serialize as {"num": n, "den": d, "value": x} when exact and
// {"value": x} otherwise. The sweep CSV header is
//   axis,value,cost_ne,cost_opt,pos,poa,equilibrium
// with decimal values (shortest round-trip form) and empty fields for unset
// metrics.

#include "qpigou/equilibrium.hpp"
#include "qpigou/game.hpp"
#include "qpigou/metrics.hpp"
#include "qpigou/sweep.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qpigou {

nlohmann::json to_json(const Number& x);
nlohmann::json to_json(const CostBimatrix& m);
nlohmann::json to_json(const EquilibriumResult& eq);
nlohmann::json to_json(const MetricsReport& r);
nlohmann::json to_json(const SweepSeries& s);

/// RFC 4180 field quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view text);

std::string to_csv(const CostBimatrix& m);
std::string to_csv(const SweepSeries& s);

std::string to_table(const CostBimatrix& m);
std::string to_table(const EquilibriumResult& eq, const MetricsReport& r);
std::string to_table(const SweepSeries& s);

} // namespace qpigou
