#pragma once

#include <string>
#include <vector>

#include "permrec/cycle_type.hpp"
#include "permrec/graph_report.hpp"
#include "permrec/metric.hpp"

namespace permrec {

/// Where N(Sym_n(T), r) is attained, and whether a 3-cycle attains it.
/// Informational only: nothing here is asserted.
struct ConjectureProbe {
    int n = 0;
    int r = 0;
    Int value = 0; // N(Sym_n(T), r)
    std::vector<int> attaining_s;
    std::vector<std::string> attaining_classes;
    Int three_cycle_overlap = 0; // |B_r(e) ∩ B_r((1 2 3))|
    bool three_cycle_attains = false;
    std::optional<Int> n2_at_r;  // N_2(Sym_n(T), r)
    std::optional<Int> n2_at_r2; // N_2(Sym_n(T), 2)
};

inline ConjectureProbe probe_three_cycle_conjecture(int n, int r, const MetricOptions& opts = {}) {
    if (r < 1) throw DomainError("probe needs r >= 1");
    if (n < 2 * r + 1) throw DomainError("probe needs n >= 2r + 1");
    const GeneratorSet g = GeneratorSet::all_transpositions(n);
    const NResult res = n_value(g, r, opts);
    ConjectureProbe out;
    out.n = n;
    out.r = r;
    out.value = res.value;
    out.attaining_s = res.attaining_s;
    for (int s : res.attaining_s) {
        for (const auto& w : res.per_s.at(s)->witnesses) out.attaining_classes.push_back(to_string(cycle_type(w)));
    }
    const MetricBall br = identity_ball(g, r, opts);
    out.three_cycle_overlap = identity_overlap(br, Permutation::transposition(n, 1, 2) * Transposition{2, 3});
    out.three_cycle_attains = out.three_cycle_overlap == out.value;
    if (const auto& ns = res.per_s.at(2)) out.n2_at_r = ns->value;
    if (r == 2) {
        out.n2_at_r2 = out.n2_at_r;
    } else if (auto ns = n_s_value(g, 2, 2, opts)) {
        out.n2_at_r2 = ns->value;
    }
    return out;
}

inline Json to_json(const ConjectureProbe& p) {
    Json j;
    j["kind"] = "probe";
    j["n"] = p.n;
    j["r"] = p.r;
    j["n_value"] = p.value;
    j["attaining_s"] = p.attaining_s;
    j["attaining_classes"] = p.attaining_classes;
    j["three_cycle_overlap"] = p.three_cycle_overlap;
    j["three_cycle_attains"] = p.three_cycle_attains;
    j["n2_at_r"] = optional_json(p.n2_at_r);
    j["n2_at_r2"] = optional_json(p.n2_at_r2);
    return j;
}

} // namespace permrec
