#pragma once

// JSON parameter profile: keys m, q, B, c, hbar (numbers, CGS units);
// absent keys default to 1.0; anything else is rejected.

#include <fstream>
#include <string>

#include <json.hpp>

#include "landau/params.hpp"

namespace landau {

inline PhysicalParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("params profile: expected a JSON object");
    PhysicalParams p;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            throw std::invalid_argument("params profile: key '" + key + "' is not a number");
        const double v = value.get<double>();
        if (key == "m")
            p.m = v;
        else if (key == "q")
            p.q = v;
        else if (key == "B")
            p.B = v;
        else if (key == "c")
            p.c = v;
        else if (key == "hbar")
            p.hbar = v;
        else
            throw std::invalid_argument("params profile: unknown key '" + key + "'");
    }
    p.validate();
    return p;
}

inline PhysicalParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("params profile: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("params profile: " + std::string(e.what()));
    }
    return params_from_json(j);
}

}  // namespace landau
