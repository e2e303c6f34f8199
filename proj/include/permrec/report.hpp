#pragma once

#include <optional>
#include <string>

#include "permrec/cycle_type.hpp"
#include "permrec/graph_report.hpp"
#include "permrec/metric.hpp"

namespace permrec {

/// GraphReport for Cay(Sym_n, S): λ, μ from generator products, N values by
/// ball intersection, diameter when the whole graph fits the budget.
inline GraphReport cayley_graph_report(const GeneratorSet& g, int r, const MetricOptions& opts = {}) {
    if (r < 1) throw DomainError("radius must be positive");
    GraphReport rep;
    rep.n = g.degree();
    rep.generator_kind = std::string(short_name(g.kind()));
    rep.v = factorial(g.degree());
    rep.k = static_cast<Int>(g.size());
    const LambdaMu lm = lambda_mu(g);
    rep.lambda = lm.lambda;
    rep.mu = lm.mu;
    if (g.degree() <= opts.limits.max_whole_graph_degree) rep.diameter = diameter(g, opts.limits);
    rep.r = r;
    for (int rr = 1; rr <= r; ++rr) {
        NResult res = n_value(g, rr, opts);
        rep.n_r[rr] = res.value;
        if (rr != r) continue;
        for (auto& [s, ns] : res.per_s) {
            rep.n_s[s] = ns ? std::optional<Int>(ns->value) : std::nullopt;
            if (!ns) continue;
            auto& list = rep.witnesses[s];
            for (const auto& w : ns->witnesses) {
                list.push_back(ns->class_reduced ? to_string(w) + " {" + to_string(cycle_type(w)) + "}"
                                                 : to_string(w));
            }
        }
    }
    return rep;
}

} // namespace permrec
