#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "network.hpp"

namespace grovelab {

inline nlohmann::json spec_to_json(const NetworkSpec& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["zeta"] = s.zeta;
    j["interior"] = s.interior;
    j["edges"] = nlohmann::json::array();
    for (auto& e : s.edges) j["edges"].push_back({{"id", e.id}, {"ends", {e.end0, e.end1}}});
    j["rotation"] = s.rotation;
    if (!s.weights.empty()) {
        nlohmann::json w = nlohmann::json::object();
        for (auto& [id, r] : s.weights) w[id] = r.get_str();
        j["weights"] = w;
    }
    return j;
}

inline std::string network_to_json(const CactusNetwork& g, int indent = 2) {
    return spec_to_json(network_spec(g)).dump(indent);
}

namespace detail {

inline Rat parse_rational(const std::string& s) {
    Rat r;
    try {
        r = Rat(strip(s));
    } catch (const std::exception&) {
        throw InputError("bad rational '" + s + "'");
    }
    if (r.get_den() == 0) throw InputError("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace detail

inline NetworkSpec spec_from_json(const nlohmann::json& j) {
    try {
        NetworkSpec s;
        s.n = j.at("n").get<int>();
        s.zeta = j.at("zeta").get<std::vector<std::vector<int>>>();
        if (j.contains("interior")) s.interior = j.at("interior").get<std::vector<std::string>>();
        for (auto& e : j.at("edges")) {
            auto ends = e.at("ends").get<std::vector<std::string>>();
            if (ends.size() != 2) throw InputError("edge needs exactly two ends");
            s.edges.push_back({e.at("id").get<std::string>(), ends[0], ends[1]});
        }
        if (j.contains("rotation"))
            s.rotation = j.at("rotation").get<std::map<std::string, std::vector<std::string>>>();
        if (j.contains("weights"))
            for (auto& [id, v] : j.at("weights").items()) {
                Rat r = v.is_string() ? detail::parse_rational(v.get<std::string>())
                                      : v.is_number_integer() ? Rat(v.get<long>()) : throw InputError("weight must be a rational string");
                if (r <= 0) throw InputError("weight of " + id + " must be positive");
                s.weights[id] = r;
            }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed network JSON: ") + e.what());
    }
}

inline CactusNetwork network_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return build_network(spec_from_json(j));
}

inline CactusNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return network_from_json(buf.str());
}

} // namespace grovelab
