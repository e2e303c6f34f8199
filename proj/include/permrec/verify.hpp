#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permrec/ball.hpp"
#include "permrec/closed_forms.hpp"
#include "permrec/cycle_type.hpp"
#include "permrec/metric.hpp"
#include "permrec/reconstruct.hpp"
#include "permrec/report.hpp"
#include "permrec/small_graph.hpp"
#include "permrec/structure.hpp"

// Claim registry: every closed-form statement about the three Cayley graphs
// and the small reference graphs, checked against brute-force measurement.

namespace permrec {

enum class Verdict { Pass, Fail, Skip };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skipped";
    }
    return "?";
}

struct VerifyRow {
    std::string id;       // stable claim id, e.g. "transposition.n_value.r2"
    std::string claim;    // plain-language statement
    std::string instance; // e.g. "n=5"
    std::string expected;
    std::string measured;
    Verdict verdict = Verdict::Skip;
    std::string reason;
};

struct VerifyConfig {
    int max_n = 5;
    MetricOptions metric{};
    std::size_t trials = 200;
    std::uint64_t seed = 1;
};

inline Json to_json(const VerifyRow& r) {
    Json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["instance"] = r.instance;
    j["expected"] = r.expected;
    j["measured"] = r.measured;
    j["verdict"] = std::string(to_string(r.verdict));
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

/// Overall status: true unless a row failed (skips never fail a run).
inline bool all_passed(const std::vector<VerifyRow>& rows) {
    return std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.verdict == Verdict::Fail; });
}

namespace detail {

inline std::string family_id(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::AllTranspositions: return "transposition";
    case GeneratorKind::Adjacent: return "bubble";
    case GeneratorKind::Prefix: return "star";
    case GeneratorKind::Explicit: return "explicit";
    }
    return "?";
}

inline std::string n_inst(int n) { return "n=" + std::to_string(n); }

class RowSink {
public:
    explicit RowSink(std::vector<VerifyRow>& rows) : rows_(rows) {}

    /// Runs `measure` and compares its string against `expected`. Capacity
    /// overruns become skipped rows.
    void check(std::string id, std::string claim, std::string instance, std::string expected,
               const std::function<std::string()>& measure) {
        VerifyRow row{std::move(id), std::move(claim), std::move(instance), std::move(expected), "", Verdict::Skip, ""};
        try {
            row.measured = measure();
            row.verdict = row.measured == row.expected ? Verdict::Pass : Verdict::Fail;
        } catch (const CapacityExceeded& e) {
            row.reason = e.what();
        }
        rows_.push_back(std::move(row));
    }

    /// For checks whose verdict is not string equality.
    void check_bool(std::string id, std::string claim, std::string instance, std::string expected,
                    const std::function<std::pair<bool, std::string>()>& measure) {
        VerifyRow row{std::move(id), std::move(claim), std::move(instance), std::move(expected), "", Verdict::Skip, ""};
        try {
            auto [ok, measured] = measure();
            row.measured = std::move(measured);
            row.verdict = ok ? Verdict::Pass : Verdict::Fail;
        } catch (const CapacityExceeded& e) {
            row.reason = e.what();
        }
        rows_.push_back(std::move(row));
    }

    void skip(std::string id, std::string claim, std::string instance, std::string reason) {
        rows_.push_back({std::move(id), std::move(claim), std::move(instance), "", "", Verdict::Skip, std::move(reason)});
    }

private:
    std::vector<VerifyRow>& rows_;
};

inline const std::vector<GeneratorKind>& standard_kinds() {
    static const std::vector<GeneratorKind> kinds{GeneratorKind::AllTranspositions, GeneratorKind::Adjacent,
                                                  GeneratorKind::Prefix};
    return kinds;
}

/// Ordered sequences of i transpositions whose product is `target`, counted
/// by exhaustive enumeration.
inline Int count_factorizations_exhaustively(const Permutation& target, int i) {
    const GeneratorSet t = GeneratorSet::all_transpositions(target.degree());
    std::unordered_map<std::uint64_t, Int> layer{{Permutation::identity(target.degree()).packed(), 1}};
    for (int step = 0; step < i; ++step) {
        std::unordered_map<std::uint64_t, Int> next;
        for (const auto& [code, ways] : layer) {
            const Permutation p = Permutation::from_packed(target.degree(), code);
            for (std::size_t s = 0; s < t.size(); ++s) next[t.neighbor(p, s).packed()] += ways;
        }
        layer = std::move(next);
    }
    const auto it = layer.find(target.packed());
    return it == layer.end() ? 0 : it->second;
}

inline std::string claim_string(const Claim& c) { return c ? std::to_string(*c) : "no claim"; }

} // namespace detail

inline void verify_classes(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (int n = 3; n <= std::min(cfg.max_n, 7); ++n) {
        Int total = 0;
        for (const auto& ct : all_cycle_types(n)) {
            const Int size = conjugacy_class_size(ct);
            total += size;
            sink.check("classes.size", "conjugacy class size n!/prod(j^h_j h_j!) equals enumeration",
                       detail::n_inst(n) + " type " + to_string(ct), std::to_string(size),
                       [&] { return std::to_string(enumerate_class(ct).size()); });
        }
        sink.check("classes.partition", "class sizes sum to n!", detail::n_inst(n), std::to_string(factorial(n)),
                   [&] { return std::to_string(total); });
    }
    for (int n = 3; n <= std::min(cfg.max_n, 6); ++n) {
        sink.check_bool("classes.sphere_union", "sphere S_i of the transposition graph is the union of classes with n-i cycles",
                        detail::n_inst(n), "all spheres equal", [&] {
                            const DistanceTable table(GeneratorSet::all_transpositions(n), cfg.metric.limits);
                            for (int i = 0; i <= table.eccentricity(); ++i) {
                                auto bfs = table.sphere(i);
                                std::vector<Permutation> from_classes;
                                for (const auto& ct : all_cycle_types(n)) {
                                    if (ct.sphere_index() != i) continue;
                                    auto members = enumerate_class(ct);
                                    from_classes.insert(from_classes.end(), members.begin(), members.end());
                                }
                                std::sort(bfs.begin(), bfs.end());
                                std::sort(from_classes.begin(), from_classes.end());
                                if (bfs != from_classes) return std::pair{false, "sphere " + std::to_string(i) + " differs"};
                            }
                            return std::pair{true, std::string("all spheres equal")};
                        });
    }
}

inline void verify_factorizations(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (int n = 3; n <= std::min(cfg.max_n, 5); ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            if (ct.sphere_index() == 0) continue;
            sink.check("factorizations.count", "minimal transposition factorizations i! prod (j^(j-2)/(j-1)!)^h_j",
                       detail::n_inst(n) + " type " + to_string(ct),
                       std::to_string(denes_factorization_count(ct).count), [&] {
                           return std::to_string(
                               detail::count_factorizations_exhaustively(class_representative(ct), ct.sphere_index()));
                       });
        }
    }
}

inline void verify_local_params(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (int n = 3; n <= std::min(cfg.max_n, 6); ++n) {
        sink.check("transposition.local_params",
                   "c = (sum j^2 h_j - n)/2, a = 0, b = (n^2 - sum j^2 h_j)/2 for every permutation",
                   detail::n_inst(n), "0 mismatches", [&] {
                       const GeneratorSet g = GeneratorSet::all_transpositions(n);
                       const DistanceTable table(g, cfg.metric.limits);
                       std::size_t bad = 0;
                       for (int i = 0; i <= table.eccentricity(); ++i) {
                           for (const auto& p : table.sphere(i)) {
                               const LocalParams m = local_params(p, g, table);
                               const auto f = transposition_local_params(cycle_type(p));
                               bad += (m.c == f.c && m.a == f.a && m.b == f.b) ? 0 : 1;
                           }
                       }
                       return std::to_string(bad) + " mismatches";
                   });
    }
}

inline void verify_lambda_mu(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (auto kind : detail::standard_kinds()) {
        const int lo = kind == GeneratorKind::Prefix ? 4 : 3;
        const auto [lam, mu] = claimed_lambda_mu(kind);
        for (int n = lo; n <= std::min(cfg.max_n, 8); ++n) {
            const GeneratorSet g = GeneratorSet::make(kind, n);
            const LambdaMu lm = lambda_mu(g);
            sink.check(detail::family_id(kind) + ".lambda_mu", "(lambda, mu) from generator products",
                       detail::n_inst(n), "(" + std::to_string(lam) + "," + std::to_string(mu) + ")",
                       [&] { return "(" + std::to_string(lm.lambda) + "," + std::to_string(lm.mu) + ")"; });
            sink.check(detail::family_id(kind) + ".n1_formula", "N(G,1) = max(lambda+2, mu)", detail::n_inst(n),
                       std::to_string(std::max(lm.lambda + 2, lm.mu)),
                       [&] { return std::to_string(n_value(g, 1, cfg.metric).value); });
        }
    }
}

inline void verify_n_values(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (auto kind : detail::standard_kinds()) {
        const int lo = kind == GeneratorKind::Prefix ? 4 : 3;
        for (int r = 1; r <= 2; ++r) {
            const int hi = kind == GeneratorKind::AllTranspositions && r == 2 ? 6 : 7;
            for (int n = lo; n <= std::min(cfg.max_n, hi); ++n) {
                const Claim c = kind == GeneratorKind::AllTranspositions ? transposition_N(n, r)
                                                                          : bubble_star_N(kind, n, r);
                if (!c) continue;
                sink.check(detail::family_id(kind) + ".n_value.r" + std::to_string(r),
                           "reconstruction number N(G," + std::to_string(r) + ")", detail::n_inst(n),
                           std::to_string(*c), [&] {
                               return std::to_string(n_value(GeneratorSet::make(kind, n), r, cfg.metric).value);
                           });
            }
        }
    }
}

inline void verify_ns_table(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (auto kind : detail::standard_kinds()) {
        const int hi = kind == GeneratorKind::AllTranspositions ? 6 : 7;
        for (int n = 3; n <= std::min(cfg.max_n, hi); ++n) {
            const auto table = kind == GeneratorKind::AllTranspositions ? transposition_ns_table(n)
                                                                        : bubble_star_ns_table(kind, n);
            bool any = false;
            for (const auto& [s, c] : table) any = any || c.has_value();
            if (!any) continue;
            const NResult res = n_value(GeneratorSet::make(kind, n), 2, cfg.metric);
            for (const auto& [s, c] : table) {
                if (!c) continue;
                sink.check(detail::family_id(kind) + ".ns.s" + std::to_string(s),
                           "N_" + std::to_string(s) + "(G,2)", detail::n_inst(n), std::to_string(*c), [&] {
                               const auto& ns = res.per_s.at(s);
                               return ns ? std::to_string(ns->value) : std::string("absent");
                           });
            }
        }
    }
}

inline void verify_diameters(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (auto kind : detail::standard_kinds()) {
        for (int n = 3; n <= std::min(cfg.max_n, 7); ++n) {
            sink.check(detail::family_id(kind) + ".diameter", "diameter by whole-graph search", detail::n_inst(n),
                       detail::claim_string(claimed_diameter(kind, n)),
                       [&] { return std::to_string(diameter(GeneratorSet::make(kind, n), cfg.metric.limits)); });
        }
    }
}

inline void verify_structure(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (int n = 3; n <= std::min(cfg.max_n, 5); ++n) {
        const Permutation e = Permutation::identity(n);
        const GeneratorSet T = GeneratorSet::all_transpositions(n);
        const GeneratorSet t = GeneratorSet::adjacent(n);
        const GeneratorSet st = GeneratorSet::prefix(n);
        sink.check("transposition.k24", "no K_{2,4} through a vertex", detail::n_inst(n), "0",
                   [&] { return std::to_string(complete_bipartite_count(T, 2, 4, e)); });
        sink.check("transposition.k33", "C(n,3) copies of K_{3,3} through each vertex", detail::n_inst(n),
                   std::to_string(binomial(n, 3)), [&] { return std::to_string(complete_bipartite_count(T, 3, 3, e)); });
        sink.check("bubble.k23", "no K_{2,3} through a vertex", detail::n_inst(n), "0",
                   [&] { return std::to_string(complete_bipartite_count(t, 2, 3, e)); });
        if (n >= 4) {
            sink.check("bubble.k22", "C(n-2,2) copies of K_{2,2} through each vertex", detail::n_inst(n),
                       std::to_string(binomial(n - 2, 2)),
                       [&] { return std::to_string(complete_bipartite_count(t, 2, 2, e)); });
        }
        sink.check("star.short_cycles", "no cycles of length 3, 4, 5 or 7", detail::n_inst(n), "none", [&] {
            std::string found;
            for (const auto& [len, present] : girth_cycle_check(st, {3, 4, 5, 7}, cfg.metric.limits)) {
                if (present) found += (found.empty() ? "" : ",") + std::to_string(len);
            }
            return found.empty() ? std::string("none") : found;
        });
    }
}

inline void verify_distance_regularity(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    if (cfg.max_n >= 4) {
        for (auto kind : detail::standard_kinds()) {
            sink.check(detail::family_id(kind) + ".not_distance_regular", "not distance-regular (witness found)",
                       detail::n_inst(4), "false", [&] {
                           const auto res = is_distance_regular(GeneratorSet::make(kind, 4), cfg.metric.limits);
                           return std::string(res.distance_regular ? "true" : "false");
                       });
        }
    }
    sink.check("hamming.distance_regular", "Hamming graph is distance-regular", "L_3(2)", "true", [&] {
        return std::string(is_distance_regular(SmallGraph::hamming(3, 2)).distance_regular ? "true" : "false");
    });
    sink.check("johnson.distance_regular", "Johnson graph is distance-regular", "J_2^5", "true", [&] {
        return std::string(is_distance_regular(SmallGraph::johnson(5, 2)).distance_regular ? "true" : "false");
    });
}

inline void verify_closed_forms(const VerifyConfig&, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    for (int n = 2; n <= 4; ++n) {
        for (int q = 2; q <= 3; ++q) {
            const GraphReport rep = small_graph_report(SmallGraph::hamming(n, q), 2);
            for (int r = 1; r <= 2; ++r) {
                sink.check("hamming.n_value", "N(L_n(q),r) = q sum_{i<r} C(n-1,i)(q-1)^i",
                           "n=" + std::to_string(n) + " q=" + std::to_string(q) + " r=" + std::to_string(r),
                           std::to_string(hamming_N(n, q, r)), [&] { return std::to_string(rep.n_r.at(r)); });
            }
        }
    }
    for (int n = 2; n <= 8; ++n) {
        for (int e = 1; e <= n - 1; ++e) {
            const GraphReport rep = small_graph_report(SmallGraph::johnson(n, e), 2);
            for (int r = 1; r <= 2; ++r) {
                sink.check("johnson.n_value", "N(J_e^n,r) = n sum_{i<r} C(e-1,i)C(n-e-1,i)/(i+1)",
                           "n=" + std::to_string(n) + " e=" + std::to_string(e) + " r=" + std::to_string(r),
                           std::to_string(johnson_N(n, e, r)), [&] { return std::to_string(rep.n_r.at(r)); });
            }
        }
    }
}

inline void verify_bounds(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    const std::string upper_claim = "N(G,1) <= (v+lambda)/2";
    auto upper_row = [&](const std::string& id, const std::string& instance, Int v, std::optional<Int> k, Int lambda,
                         Int n1, bool expect_attained) {
        if (!k || *k < 2 || *k > v - 2 || lambda > *k - 2) {
            sink.skip(id, upper_claim, instance, "outside the bound's parameter domain");
            return;
        }
        const Rational bound = ball_overlap_upper_bound(v, *k, lambda);
        const auto rep = make_bound_report(instance, "upper", BoundReport::Direction::Upper, bound, n1);
        sink.check_bool(id, upper_claim, instance, (expect_attained ? "attained " : "holds ") + to_string(bound), [&] {
            const bool ok = rep.satisfied && (!expect_attained || rep.attained);
            return std::pair{ok, std::to_string(n1) + (rep.attained ? " (attained)" : "")};
        });
    };

    for (auto kind : detail::standard_kinds()) {
        for (int n = 3; n <= std::min(cfg.max_n, 6); ++n) {
            const std::string inst = std::string(short_name(kind)) + " " + detail::n_inst(n);
            try {
                const GeneratorSet g = GeneratorSet::make(kind, n);
                const GraphReport rep = cayley_graph_report(g, 2, cfg.metric);
                upper_row(detail::family_id(kind) + ".upper_bound", inst, rep.v, rep.k, rep.lambda, rep.n_r.at(1),
                          false);
                const Int n1 = rep.n_r.at(1);
                const Int n2 = rep.n_s.at(2).value_or(0);
                const Rational lower = distance_two_lower_bound(*rep.k, rep.mu, n1);
                const auto lrep = make_bound_report(inst, "lower", BoundReport::Direction::Lower, lower, n2);
                sink.check_bool(detail::family_id(kind) + ".lower_bound",
                                "N_2(G,2) >= mu(k-1-3/4(mu-1)(N(G,1)-2))+2", inst, "holds " + to_string(lower),
                                [&] { return std::pair{lrep.satisfied, std::to_string(n2)}; });
                if (kind == GeneratorKind::Adjacent && rep.mu == 2 && n1 == 2) {
                    sink.check("bubble.lower_bound_attained", "N_2(G,2) = 2k when mu = 2 and N(G,1) = 2", inst,
                               std::to_string(2 * *rep.k), [&] { return std::to_string(n2); });
                }
                const auto cycles = girth_cycle_check(g, {3, 5}, cfg.metric.limits);
                const auto app = overlap_dominance_applicable(*rep.k, rep.mu, cycles.at(3), cycles.at(5));
                if (app.applicable) {
                    const Int n1_2 = rep.n_s.at(1).value_or(0);
                    sink.check_bool(detail::family_id(kind) + ".dominance", "N_2(G,2) >= N_1(G,2) under its premises",
                                    inst, "N_2 >= N_1", [&] {
                                        return std::pair{n2 >= n1_2,
                                                         std::to_string(n2) + " vs " + std::to_string(n1_2)};
                                    });
                }
            } catch (const CapacityExceeded& e) {
                sink.skip(detail::family_id(kind) + ".bounds", "bounds", inst, e.what());
            }
        }
    }
    for (int parts = 2; parts <= 3; ++parts) {
        for (int m = 2; m <= 3; ++m) {
            const SmallGraph g = SmallGraph::complete_multipartite(parts, m);
            const GraphReport rep = small_graph_report(g, 1);
            upper_row("multipartite.upper_bound_attained", g.name(), rep.v, rep.k, rep.lambda, rep.n_r.at(1), true);
        }
    }
    for (auto [n, q] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
        const SmallGraph g = SmallGraph::hamming(n, q);
        const GraphReport rep = small_graph_report(g, 1);
        upper_row("hamming.upper_bound", g.name(), rep.v, rep.k, rep.lambda, rep.n_r.at(1), false);
    }
    for (auto [n, e] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{6, 3}}) {
        const SmallGraph g = SmallGraph::johnson(n, e);
        const GraphReport rep = small_graph_report(g, 1);
        upper_row("johnson.upper_bound", g.name(), rep.v, rep.k, rep.lambda, rep.n_r.at(1), false);
    }
}

inline void verify_reconstruction(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    detail::RowSink sink(rows);
    const int n = std::min(cfg.max_n, 5);
    if (n < 4) {
        sink.skip("reconstruction", "reconstruction experiments", detail::n_inst(n), "needs max-n >= 4");
        return;
    }
    for (auto kind : detail::standard_kinds()) {
        for (int r = 1; r <= 2; ++r) {
            const GeneratorSet g = GeneratorSet::make(kind, n);
            const std::string inst = detail::n_inst(n) + " r=" + std::to_string(r);
            ExperimentConfig ec{g, r, cfg.trials, cfg.seed, std::nullopt, ExperimentMode::Honest,
                                ErrorCountPolicy::UniformUpToR, cfg.metric};
            sink.check(detail::family_id(kind) + ".reconstruct.threshold",
                       "N(G,r)+1 distinct patterns always reconstruct uniquely", inst, "unique-rate 1", [&] {
                           const auto s = run_experiment(ec);
                           return s.unique == s.trials && s.soundness_violations == 0
                                      ? std::string("unique-rate 1")
                                      : "unique " + std::to_string(s.unique) + "/" + std::to_string(s.trials);
                       });
            sink.check(detail::family_id(kind) + ".reconstruct.sharp",
                       "some N(G,r) distinct patterns leave two candidates", inst, "ambiguous", [&] {
                           const auto w = ambiguity_witness(g, r, cfg.metric);
                           return std::string(to_string(reconstruct(w.patterns, r, g, cfg.metric.limits).status));
                       });
        }
    }
}

namespace detail {
using SuiteFn = void (*)(const VerifyConfig&, std::vector<VerifyRow>&);
}

inline const std::vector<std::pair<std::string, detail::SuiteFn>>& verify_suites() {
    static const std::vector<std::pair<std::string, detail::SuiteFn>> suites{
        {"classes", &verify_classes},
        {"factorizations", &verify_factorizations},
        {"local-params", &verify_local_params},
        {"lambda-mu", &verify_lambda_mu},
        {"n-values", &verify_n_values},
        {"ns-table", &verify_ns_table},
        {"diameters", &verify_diameters},
        {"structure", &verify_structure},
        {"distance-regular", &verify_distance_regularity},
        {"closed-forms", &verify_closed_forms},
        {"bounds", &verify_bounds},
        {"reconstruction", &verify_reconstruction},
    };
    return suites;
}

/// Runs one named suite, or every suite for "all". Throws DomainError for an
/// unknown name.
inline std::vector<VerifyRow> run_verify(std::string_view suite, const VerifyConfig& cfg) {
    std::vector<VerifyRow> rows;
    bool matched = false;
    for (const auto& [name, fn] : verify_suites()) {
        if (suite == "all" || suite == name) {
            fn(cfg, rows);
            matched = true;
        }
    }
    if (!matched) throw DomainError("unknown verify suite '" + std::string(suite) + "'");
    return rows;
}

} // namespace permrec
