#include "qpigou/serialize.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace qpigou {

using nlohmann::json;

namespace {

json optional_json(const std::optional<Number>& x) { return x ? to_json(*x) : json(nullptr); }

std::string decimal(const std::optional<Number>& x) { return x ? fmt::format("{}", x->value()) : std::string(); }

std::string optional_text(const std::optional<Number>& x) { return x ? x->to_string() : std::string("-"); }

json profile_json(const PureProfile& p, const CostBimatrix* m = nullptr)
{
    json j{{"row", p.row_label}, {"col", p.col_label}};
    if (m) {
        j["cost_alice"] = to_json(m->alice(p.row, p.col));
        j["cost_bob"] = to_json(m->bob(p.row, p.col));
    }
    return j;
}

json numbers_json(const std::vector<Number>& values)
{
    json arr = json::array();
    for (const auto& v : values) {
        arr.push_back(to_json(v));
    }
    return arr;
}

json mixed_json(const MixedProfile& p)
{
    return {{"alice", numbers_json(p.alice)},
            {"bob", numbers_json(p.bob)},
            {"cost_alice", to_json(p.cost_alice)},
            {"cost_bob", to_json(p.cost_bob)},
            {"label", p.label()}};
}

std::string pair_text(const CostPair& c) { return fmt::format("({}, {})", c.alice.to_string(), c.bob.to_string()); }

} // namespace

json to_json(const Number& x)
{
    if (x.is_exact()) {
        return {{"num", x.rational().numerator()}, {"den", x.rational().denominator()}, {"value", x.value()}};
    }
    return {{"value", x.value()}};
}

json to_json(const CostBimatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) {
            row.push_back({{"alice", to_json(m.alice(r, c))}, {"bob", to_json(m.bob(r, c))}});
        }
        rows.push_back(std::move(row));
    }
    return {{"strategies", m.labels()}, {"exact", m.is_exact()}, {"cells", std::move(rows)}};
}

json to_json(const EquilibriumResult& eq)
{
    json j;
    j["strict_pure"] = json::array();
    for (const auto& p : eq.strict_pure) j["strict_pure"].push_back(profile_json(p));
    j["weak_pure"] = json::array();
    for (const auto& p : eq.weak_pure) j["weak_pure"].push_back(profile_json(p));
    j["mixed"] = json::array();
    for (const auto& p : eq.mixed) j["mixed"].push_back(mixed_json(p));
    if (eq.selected) {
        j["selected"] = {{"label", eq.selected->label()},
                         {"selection", std::string(to_string(*eq.selection))},
                         {"cost_alice", to_json(eq.selected->costs.alice)},
                         {"cost_bob", to_json(eq.selected->costs.bob)}};
    } else {
        j["selected"] = nullptr;
    }
    j["diagnostics"] = eq.diagnostics;
    return j;
}

json to_json(const MetricsReport& r)
{
    json j{{"cost_ne", optional_json(r.cost_ne)},
           {"cost_opt", to_json(r.cost_opt)},
           {"pos", optional_json(r.pos)},
           {"poa", optional_json(r.poa)},
           {"equilibrium", r.equilibrium},
           {"opt_convention", std::string(to_string(r.convention))},
           {"equilibrium_costs", numbers_json(r.equilibrium_costs)}};
    j["k"] = r.k ? json(*r.k) : json(nullptr);
    if (r.convention == OptConvention::GlobalOverK) {
        j["opt_attained_at"] = r.opt_attained_at;
    }
    return j;
}

json to_json(const SweepSeries& s)
{
    json points = json::array();
    for (const auto& p : s.points) {
        json point = to_json(p.metrics);
        point["axis"] = s.axis;
        point["value"] = p.value;
        points.push_back(std::move(point));
    }
    json j{{"axis", s.axis},
           {"variant", std::string(to_string(s.variant))},
           {"mode", std::string(to_string(s.mode))},
           {"strategies", s.strategies},
           {"n", s.n},
           {"points", std::move(points)}};
    j["k"] = s.k ? json(*s.k) : json(nullptr);
    j["gamma"] = s.gamma ? json(*s.gamma) : json(nullptr);
    return j;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string to_csv(const CostBimatrix& m)
{
    std::string out = "row,col,cost_alice,cost_bob\n";
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            out += fmt::format("{},{},{},{}\n", csv_field(m.label(r)), csv_field(m.label(c)),
                               m.alice(r, c).to_string(), m.bob(r, c).to_string());
        }
    }
    return out;
}

std::string to_csv(const SweepSeries& s)
{
    std::string out = "axis,value,cost_ne,cost_opt,pos,poa,equilibrium\n";
    for (const auto& p : s.points) {
        const auto& m = p.metrics;
        out += fmt::format("{},{},{},{},{},{},{}\n", s.axis, p.value_text, decimal(m.cost_ne),
                           decimal(m.cost_opt), decimal(m.pos), decimal(m.poa), csv_field(m.equilibrium));
    }
    return out;
}

std::string to_table(const CostBimatrix& m)
{
    std::vector<std::vector<std::string>> grid(m.size() + 1, std::vector<std::string>(m.size() + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        grid[0][i + 1] = m.label(i);
        grid[i + 1][0] = m.label(i);
        for (std::size_t c = 0; c < m.size(); ++c) {
            grid[i + 1][c + 1] = pair_text(m.at(i, c));
        }
    }
    std::vector<std::size_t> width(m.size() + 1, 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += fmt::format("{:<{}}", row[c], width[c] + (c + 1 < row.size() ? 3 : 0));
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string to_table(const EquilibriumResult& eq, const MetricsReport& r)
{
    const auto join = [](const std::vector<PureProfile>& ps) {
        std::string s;
        for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + ps[i].label();
        return s.empty() ? std::string("none") : s;
    };
    std::string out;
    out += fmt::format("strict pure NE : {}\n", join(eq.strict_pure));
    out += fmt::format("weak pure NE   : {}\n", join(eq.weak_pure));
    if (eq.mixed.empty()) {
        out += "mixed NE       : none\n";
    }
    for (const auto& p : eq.mixed) {
        out += fmt::format("mixed NE       : {}  costs ({}, {})\n", p.label(), p.cost_alice.to_string(),
                           p.cost_bob.to_string());
    }
    out += fmt::format("selected       : {}{}\n", r.equilibrium,
                       eq.selection ? fmt::format(" [{}]", to_string(*eq.selection)) : std::string());
    out += fmt::format("cost(NE)       : {}\n", optional_text(r.cost_ne));
    out += fmt::format("cost(OPT)      : {} [{}]\n", r.cost_opt.to_string(), to_string(r.convention));
    out += fmt::format("PoS            : {}\n", optional_text(r.pos));
    out += fmt::format("PoA            : {}\n", optional_text(r.poa));
    return out;
}

std::string to_table(const SweepSeries& s)
{
    std::string out = fmt::format("{:>20}  {:>20}  {:>20}  {:>20}  {:>20}  {}\n", s.axis, "cost_ne", "cost_opt", "pos",
                                  "poa", "equilibrium");
    for (const auto& p : s.points) {
        const auto& m = p.metrics;
        out += fmt::format("{:>20}  {:>20}  {:>20}  {:>20}  {:>20}  {}\n", p.value_text, decimal(m.cost_ne),
                           decimal(m.cost_opt), decimal(m.pos), decimal(m.poa), m.equilibrium);
    }
    return out;
}

} // namespace qpigou
