#ifndef COOPCTL_CONFIG_JSON_HPP
#define COOPCTL_CONFIG_JSON_HPP

// JSON adapters for the library's value types, kept out of the core headers
// so the numerics do not depend on the serializer.

#include <json.hpp>

#include "coopctl/game.hpp"
#include "coopctl/mc.hpp"
#include "coopctl/network.hpp"

namespace coopctl {

inline void to_json(nlohmann::json& j, const GameParams& g) {
    j = {{"b", g.b}, {"c", g.c}, {"u", g.u}, {"p", g.p}};
}

inline void from_json(const nlohmann::json& j, GameParams& g) {
    g.b = j.value("b", g.b);
    g.c = j.value("c", g.c);
    g.u = j.value("u", g.u);
    g.p = j.value("p", g.p);
}

inline void to_json(nlohmann::json& j, const BoundarySpec& b) {
    j = {{"x0", b.x0}, {"delta", b.delta}};
}

inline void from_json(const nlohmann::json& j, BoundarySpec& b) {
    b.x0 = j.value("x0", b.x0);
    b.delta = j.value("delta", b.delta);
}

inline void to_json(nlohmann::json& j, const NetworkSpec& spec) {
    std::visit([&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        j["model"] = model_name(spec.model);
        if constexpr (std::is_same_v<T, CompleteSpec>) {
            j["n"] = m.n;
        } else if constexpr (std::is_same_v<T, LatticeSpec>) {
            j["l"] = m.l;
            j["periodic"] = m.periodic;
        } else if constexpr (std::is_same_v<T, BarabasiAlbertSpec>) {
            j["n"] = m.n;
            j["m0"] = m.m0;
            j["m"] = m.m;
        } else if constexpr (std::is_same_v<T, WattsStrogatzSpec>) {
            j["n"] = m.n;
            j["k"] = m.k;
            j["rewire"] = m.rewire;
        } else {
            j["n"] = m.n;
            j["mean_degree"] = m.mean_degree;
        }
    }, spec.model);
    j["seed"] = spec.seed;
}

inline void from_json(const nlohmann::json& j, NetworkSpec& spec) {
    const std::string model = j.at("model").get<std::string>();
    if (model == "complete") {
        spec.model = CompleteSpec{j.value("n", 100)};
    } else if (model == "lattice") {
        spec.model = LatticeSpec{j.value("l", 10), j.value("periodic", true)};
    } else if (model == "ba") {
        spec.model = BarabasiAlbertSpec{j.value("n", 100), j.value("m0", 6), j.value("m", 2)};
    } else if (model == "ws") {
        spec.model = WattsStrogatzSpec{j.value("n", 100), j.value("k", 4), j.value("rewire", 0.1)};
    } else if (model == "er") {
        spec.model = ErdosRenyiSpec{j.value("n", 100), j.value("mean_degree", 4.0)};
    } else {
        throw InvalidParams("NetworkSpec: unknown model '" + model + "'");
    }
    spec.seed = j.value("seed", std::uint64_t{1});
}

inline void to_json(nlohmann::json& j, const UpdateRule& rule) {
    if (const auto* fermi = std::get_if<FermiRule>(&rule))
        j = {{"name", "fermi"}, {"omega", fermi->omega}};
    else
        j = {{"name", "imitation"}};
}

inline void from_json(const nlohmann::json& j, UpdateRule& rule) {
    const std::string name = j.at("name").get<std::string>();
    if (name == "fermi")
        rule = FermiRule{j.value("omega", 0.1)};
    else if (name == "imitation")
        rule = ImitationRule{};
    else
        throw InvalidParams("UpdateRule: unknown rule '" + name + "'");
}

inline nlohmann::json graph_to_json(const NetworkSpec& spec, const NetworkGraph& g) {
    nlohmann::json j;
    j["spec"] = spec;
    j["seed"] = spec.seed;
    j["n"] = g.n;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges)
        edges.push_back({u, v});
    return j;
}

} // namespace coopctl

#endif
