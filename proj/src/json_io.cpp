#include "hmap/json_io.hpp"

#include <stdexcept>

namespace hmap {

using nlohmann::json;

json to_json(const PowerSeries& p) {
    json coeffs = json::array();
    for (int n = 0; n <= p.order(); ++n) {
        coeffs.push_back(json::array({p.coeff(n).real(), p.coeff(n).imag()}));
    }
    return json{{"order", p.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const json& j) {
    if (!j.contains("order") || !j.contains("coeffs")) {
        throw std::invalid_argument("series JSON needs 'order' and 'coeffs'");
    }
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
        throw std::invalid_argument("series JSON coeffs length must equal order + 1");
    }
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("series coefficients must be [re, im] pairs");
        }
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return PowerSeries(std::move(c));
}

std::string to_string(NormalizationClass cls) {
    switch (cls) {
        case NormalizationClass::H0: return "H0";
        case NormalizationClass::H: return "H";
        default: return "unconstrained";
    }
}

NormalizationClass normalization_from_string(const std::string& s) {
    if (s == "H0") return NormalizationClass::H0;
    if (s == "H") return NormalizationClass::H;
    if (s == "unconstrained") return NormalizationClass::Unconstrained;
    throw std::invalid_argument("unknown normalization class '" + s + "'");
}

json to_json(const HarmonicMap& f) {
    return json{{"h", to_json(f.h)}, {"g", to_json(f.g)}, {"class", to_string(f.cls)}};
}

HarmonicMap map_from_json(const json& j) {
    if (!j.contains("h") || !j.contains("g")) {
        throw std::invalid_argument("map JSON needs 'h' and 'g'");
    }
    const NormalizationClass cls =
        j.contains("class") ? normalization_from_string(j.at("class").get<std::string>())
                            : NormalizationClass::Unconstrained;
    return make_map(series_from_json(j.at("h")), series_from_json(j.at("g")), cls);
}

json to_json(const BohrReport& r) {
    json j{{"radius", r.radius}, {"residual", r.residual}, {"iterations", r.iterations}};
    if (r.closed_form_root) j["closed_form_root"] = *r.closed_form_root;
    return j;
}

json to_json(const BohrCheck& c) {
    return json{{"verdict", to_string(c.verdict)},
                {"sum", c.sum},
                {"tail", c.tail},
                {"threshold", c.threshold}};
}

json to_json(const CoeffBoundReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"n", row.n},
                            {"a_abs", row.a_abs},
                            {"a_bound", row.a_bound},
                            {"b_abs", row.b_abs},
                            {"b_bound", row.b_bound},
                            {"margin", row.margin},
                            {"verdict", row.pass ? "pass" : "fail"}});
    }
    return json{{"profile", r.profile},
                {"rows", std::move(rows)},
                {"min_margin", r.min_margin},
                {"verdict", r.pass ? "pass" : "fail"}};
}

namespace {

json violations_to_json(const std::vector<GridViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back(json{{"z", json::array({v.z.real(), v.z.imag()})},
                           {"value", v.value},
                           {"lower", v.lower},
                           {"upper", v.upper},
                           {"tail", v.tail}});
    }
    return out;
}

}  // namespace

json to_json(const GrowthReport& r) {
    return json{{"verdict", r.pass ? "pass" : "fail"},
                {"points", r.points_checked},
                {"max_excess", r.max_excess},
                {"violations", violations_to_json(r.violations)}};
}

json to_json(const DistortionReport& r) {
    return json{{"verdict", r.pass ? "pass" : "fail"},
                {"points", r.points_checked},
                {"max_excess", r.max_excess},
                {"violations", violations_to_json(r.violations)}};
}

json to_json(const UnivalenceReport& r) {
    json j{{"verdict", to_string(r.verdict)}, {"reason", r.reason}};
    if (r.witness) {
        j["witness"] = json::array({json::array({r.witness->z1.real(), r.witness->z1.imag()}),
                                    json::array({r.witness->z2.real(), r.witness->z2.imag()})});
    }
    return j;
}

json to_json(const ConvexityReport& r) {
    json ladder = json::array();
    for (const auto& rung : r.ladder) {
        ladder.push_back(json{{"r", rung.r},
                              {"verdict", to_string(rung.verdict)},
                              {"min_cross", rung.min_cross},
                              {"trusted", rung.trusted}});
    }
    return json{{"verdict", to_string(r.verdict)},
                {"ladder", std::move(ladder)},
                {"weakest_r", r.weakest_r},
                {"re_ratio_min", r.re_ratio_min},
                {"re_condition_ok", r.re_condition_ok}};
}

}  // namespace hmap
