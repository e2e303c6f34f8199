#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permrec/arith.hpp"

namespace permrec {

using Json = nlohmann::ordered_json;

/// Measured parameters of one graph instance.
struct GraphReport {
    std::optional<int> n;       // degree, for Cayley graphs of Sym_n
    std::string generator_kind; // "T", "t", "st", "explicit", or a small-graph name
    Int v = 0;
    std::optional<Int> k; // set when the graph is regular
    Int lambda = 0;
    Int mu = 0;
    std::optional<int> diameter; // unset when over the whole-graph budget
    int r = 1;
    /// N_s(Γ, r) for s = 1..2r at the requested r; nullopt marks an empty sphere.
    std::map<int, std::optional<Int>> n_s;
    /// N(Γ, r') for r' = 1..r.
    std::map<int, Int> n_r;
    /// Vertices (or vertex pairs) attaining N_s(Γ, r), per s.
    std::map<int, std::vector<std::string>> witnesses;
};

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const GraphReport& rep) {
    Json j;
    j["n"] = optional_json(rep.n);
    j["generator_kind"] = rep.generator_kind;
    j["v"] = rep.v;
    j["k"] = optional_json(rep.k);
    j["lambda"] = rep.lambda;
    j["mu"] = rep.mu;
    j["diameter"] = optional_json(rep.diameter);
    j["r"] = rep.r;
    Json ns = Json::object();
    for (const auto& [s, v] : rep.n_s) ns[std::to_string(s)] = optional_json(v);
    j["n_s"] = std::move(ns);
    Json nr = Json::object();
    for (const auto& [r, v] : rep.n_r) nr[std::to_string(r)] = v;
    j["n_r"] = std::move(nr);
    Json w = Json::object();
    for (const auto& [s, list] : rep.witnesses) w[std::to_string(s)] = list;
    j["witnesses"] = std::move(w);
    return j;
}

/// Fixed CSV layout: one row per (graph, s).
inline std::string csv_header() { return "graph,n,v,k,lambda,mu,diameter,r,s,n_s,n_r"; }

inline std::vector<std::string> csv_rows(const GraphReport& rep) {
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::vector<std::string> rows;
    const auto top = rep.n_r.find(rep.r);
    for (const auto& [s, v] : rep.n_s) {
        rows.push_back(rep.generator_kind + "," + opt(rep.n) + "," + std::to_string(rep.v) + "," + opt(rep.k) + "," +
                       std::to_string(rep.lambda) + "," + std::to_string(rep.mu) + "," + opt(rep.diameter) + "," +
                       std::to_string(rep.r) + "," + std::to_string(s) + "," + opt(v) + "," +
                       (top != rep.n_r.end() ? std::to_string(top->second) : std::string()));
    }
    return rows;
}

} // namespace permrec
