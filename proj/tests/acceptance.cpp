// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. All comparisons are exact; the only tolerances are
// the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "permrec/permrec.hpp"

using namespace permrec;

namespace {

constexpr double kBudgetTranspositionN1Total = 5.0;   // s, n = 3..7
constexpr double kBudgetTranspositionN2AtSix = 60.0;  // s
constexpr double kBudgetDiameterAtSeven = 120.0;      // s, per generator set
constexpr double kBudgetReconstructionPerGraph = 60.0; // s
constexpr std::size_t kReconstructionTrials = 1000;
constexpr std::uint64_t kReconstructionSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    template <class A, class B>
    void expect_eq(const A& measured, const B& expected, const std::string& what) {
        if (!(measured == expected)) {
            std::ostringstream s;
            s << what << ": measured " << measured << ", expected " << expected;
            pass = false;
            failures.push_back(s.str());
        }
    }
};

MetricOptions options() {
    MetricOptions o;
    o.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return o;
}

const GeneratorKind kKinds[] = {GeneratorKind::AllTranspositions, GeneratorKind::Adjacent, GeneratorKind::Prefix};

std::string tag(GeneratorKind k, int n) { return std::string(short_name(k)) + " n=" + std::to_string(n); }

Outcome transposition_n1() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 3; n <= 7; ++n) o.expect_eq(n_value(GeneratorSet::all_transpositions(n), 1, options()).value, 3, tag(GeneratorKind::AllTranspositions, n));
    const double dt = seconds_since(t0);
    o.expect(dt < kBudgetTranspositionN1Total, "runtime " + std::to_string(dt) + " s over budget");
    return o;
}

Outcome transposition_n2() {
    Outcome o;
    const Int expected[] = {6, 15, 27, 42};
    double at_six = 0;
    for (int n = 3; n <= 6; ++n) {
        const auto t0 = Clock::now();
        o.expect_eq(n_value(GeneratorSet::all_transpositions(n), 2, options()).value, expected[n - 3], tag(GeneratorKind::AllTranspositions, n));
        if (n == 6) at_six = seconds_since(t0);
    }
    o.expect(at_six < kBudgetTranspositionN2AtSix, "runtime at n=6 " + std::to_string(at_six) + " s over budget");
    o.note = "n=6 in " + std::to_string(at_six).substr(0, 5) + " s";
    return o;
}

std::string ns_text(const std::optional<NsResult>& v) { return v ? std::to_string(v->value) : "absent"; }

Outcome transposition_ns_table_check() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        const NResult res = n_value(GeneratorSet::all_transpositions(n), 2, options());
        o.expect_eq(ns_text(res.per_s.at(1)), std::to_string(n * (n - 1)), tag(GeneratorKind::AllTranspositions, n) + " N_1");
        if (n >= 4) o.expect_eq(ns_text(res.per_s.at(3)), std::string("12"), tag(GeneratorKind::AllTranspositions, n) + " N_3");
        if (n >= 5) o.expect_eq(ns_text(res.per_s.at(4)), std::string("20"), tag(GeneratorKind::AllTranspositions, n) + " N_4");
    }
    return o;
}

Outcome bubble_star_values() {
    Outcome o;
    for (auto kind : {GeneratorKind::Adjacent, GeneratorKind::Prefix}) {
        const int lo = kind == GeneratorKind::Adjacent ? 3 : 4;
        for (int n = lo; n <= 7; ++n) {
            const auto g = GeneratorSet::make(kind, n);
            o.expect_eq(n_value(g, 1, options()).value, 2, tag(kind, n) + " N(G,1)");
            const NResult res = n_value(g, 2, options());
            o.expect_eq(res.value, 2 * (n - 1), tag(kind, n) + " N(G,2)");
            if (n >= 5) o.expect_eq(ns_text(res.per_s.at(4)), std::string("4"), tag(kind, n) + " N_4");
            if (n >= 4) {
                const std::string want = kind == GeneratorKind::Adjacent ? "2" : "4";
                o.expect_eq(ns_text(res.per_s.at(3)), want, tag(kind, n) + " N_3");
            }
        }
    }
    return o;
}

Outcome lambda_mu_check() {
    Outcome o;
    for (auto kind : kKinds) {
        const auto [lam, mu] = claimed_lambda_mu(kind);
        for (int n = kind == GeneratorKind::Prefix ? 4 : 3; n <= 8; ++n) {
            const auto g = GeneratorSet::make(kind, n);
            const LambdaMu lm = lambda_mu(g);
            o.expect_eq(lm.lambda, lam, tag(kind, n) + " lambda");
            o.expect_eq(lm.mu, mu, tag(kind, n) + " mu");
            o.expect_eq(n_value(g, 1, options()).value, std::max(lm.lambda + 2, lm.mu), tag(kind, n) + " N(G,1) vs max(lambda+2,mu)");
        }
    }
    return o;
}

Outcome local_params_check() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 3; n <= 6; ++n) {
        const auto g = GeneratorSet::all_transpositions(n);
        const DistanceTable table(g);
        for (int i = 0; i <= table.eccentricity(); ++i) {
            for (const auto& p : table.sphere(i)) {
                const LocalParams m = local_params(p, g, table);
                const auto f = transposition_local_params(cycle_type(p));
                o.expect(m.c == f.c && m.a == 0 && f.a == 0 && m.b == f.b, to_string(p) + " (c,a,b) mismatch");
                ++checked;
            }
        }
    }
    o.note = std::to_string(checked) + " permutations";
    return o;
}

// Independent count: ordered i-tuples of transpositions with the given product.
Int count_products(const Permutation& target, int i) {
    const auto t = GeneratorSet::all_transpositions(target.degree());
    Int count = 0;
    auto rec = [&](auto&& self, const Permutation& cur, int left) -> void {
        if (left == 0) {
            count += cur == target ? 1 : 0;
            return;
        }
        for (std::size_t s = 0; s < t.size(); ++s) self(self, t.neighbor(cur, s), left - 1);
    };
    rec(rec, Permutation::identity(target.degree()), i);
    return count;
}

Outcome denes_check() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            if (ct.sphere_index() == 0) continue;
            o.expect_eq(denes_factorization_count(ct).count, count_products(class_representative(ct), ct.sphere_index()),
                        "n=" + std::to_string(n) + " " + to_string(ct));
        }
    }
    o.expect_eq(denes_factorization_count(parse_cycle_type("3^1")).count, 3, "3-cycle");
    o.expect_eq(denes_factorization_count(parse_cycle_type("4^1")).count, 16, "4-cycle");
    return o;
}

Outcome classes_check() {
    Outcome o;
    for (int n = 3; n <= 7; ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            o.expect_eq(static_cast<Int>(enumerate_class(ct).size()), conjugacy_class_size(ct), "n=" + std::to_string(n) + " " + to_string(ct));
        }
    }
    for (int n = 3; n <= 6; ++n) {
        const DistanceTable table(GeneratorSet::all_transpositions(n));
        for (int i = 0; i <= table.eccentricity(); ++i) {
            auto bfs = table.sphere(i);
            std::vector<Permutation> union_of_classes;
            for (const auto& ct : all_cycle_types(n)) {
                if (ct.cycle_count() != n - i) continue;
                const auto members = enumerate_class(ct);
                union_of_classes.insert(union_of_classes.end(), members.begin(), members.end());
            }
            std::sort(bfs.begin(), bfs.end());
            std::sort(union_of_classes.begin(), union_of_classes.end());
            o.expect(bfs == union_of_classes, "n=" + std::to_string(n) + " sphere " + std::to_string(i));
        }
    }
    return o;
}

Outcome diameter_check() {
    Outcome o;
    double worst = 0;
    for (auto kind : kKinds) {
        for (int n = 3; n <= 7; ++n) {
            const Int expect = kind == GeneratorKind::AllTranspositions ? n - 1
                               : kind == GeneratorKind::Adjacent         ? binomial(n, 2)
                                                                         : (3 * (n - 1)) / 2;
            const auto t0 = Clock::now();
            o.expect_eq(static_cast<Int>(diameter(GeneratorSet::make(kind, n))), expect, tag(kind, n));
            if (n == 7) {
                const double dt = seconds_since(t0);
                worst = std::max(worst, dt);
                o.expect(dt < kBudgetDiameterAtSeven, tag(kind, n) + " runtime over budget");
            }
        }
    }
    o.note = "slowest n=7 run " + std::to_string(worst).substr(0, 5) + " s";
    return o;
}

Outcome structure_check() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        const auto e = Permutation::identity(n);
        const auto T = GeneratorSet::all_transpositions(n);
        const DistanceTable table(T);
        for (int i = 0; i <= table.eccentricity(); ++i) {
            for (const auto& x : table.sphere(i)) o.expect_eq(complete_bipartite_count(T, 2, 4, x), 0, tag(GeneratorKind::AllTranspositions, n) + " K_{2,4} at " + to_string(x));
        }
        o.expect_eq(complete_bipartite_count(T, 3, 3, e), binomial(n, 3), tag(GeneratorKind::AllTranspositions, n) + " K_{3,3}");
        const auto t = GeneratorSet::adjacent(n);
        o.expect_eq(complete_bipartite_count(t, 2, 3, e), 0, tag(GeneratorKind::Adjacent, n) + " K_{2,3}");
        o.expect_eq(complete_bipartite_count(t, 2, 2, e), binomial(n - 2, 2), tag(GeneratorKind::Adjacent, n) + " K_{2,2}");
        for (const auto& [len, present] : girth_cycle_check(GeneratorSet::prefix(n), {3, 4, 5, 7})) {
            o.expect(!present, tag(GeneratorKind::Prefix, n) + " has a " + std::to_string(len) + "-cycle");
        }
    }
    return o;
}

Outcome distance_regular_check() {
    Outcome o;
    for (auto kind : kKinds) {
        const auto res = is_distance_regular(GeneratorSet::make(kind, 4));
        o.expect(!res.distance_regular && res.witness.has_value(), tag(kind, 4) + " no witness");
        if (res.witness) {
            const auto& w = *res.witness;
            o.note += std::string(o.note.empty() ? "" : "; ") + std::string(short_name(kind)) + ": " + w.y1 + " vs " + w.y2 + " at d=" + std::to_string(w.distance) + " from " + w.x;
        }
    }
    o.expect(is_distance_regular(SmallGraph::hamming(3, 2)).distance_regular, "L_3(2)");
    o.expect(is_distance_regular(SmallGraph::johnson(5, 2)).distance_regular, "J_2^5");
    return o;
}

Outcome closed_forms_check() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        for (int q = 2; q <= 3; ++q) {
            const auto rep = small_graph_report(SmallGraph::hamming(n, q), 2);
            for (int r = 1; r <= 2; ++r) o.expect_eq(rep.n_r.at(r), hamming_N(n, q, r), "L_" + std::to_string(n) + "(" + std::to_string(q) + ") r=" + std::to_string(r));
        }
    }
    for (int q = 2; q <= 3; ++q) {
        const auto rep = small_graph_report(SmallGraph::lattice(q), 2);
        o.expect_eq(rep.n_r.at(1), Int{q}, "lattice N(.,1)");
        o.expect_eq(rep.n_r.at(2), Int{q * q}, "lattice N(.,2)");
    }
    for (int n = 2; n <= 8; ++n) {
        for (int e = 1; e < n; ++e) {
            const auto rep = small_graph_report(SmallGraph::johnson(n, e), 2);
            for (int r = 1; r <= 2; ++r) o.expect_eq(rep.n_r.at(r), johnson_N(n, e, r), "J_" + std::to_string(e) + "^" + std::to_string(n) + " r=" + std::to_string(r));
        }
    }
    for (int n = 4; n <= 8; ++n) {
        const auto rep = small_graph_report(SmallGraph::triangular(n), 2);
        o.expect_eq(rep.n_r.at(1), Int{n}, "T(" + std::to_string(n) + ") N(.,1)");
        o.expect_eq(rep.n_r.at(2), Int{n * (n - 1) / 2}, "T(" + std::to_string(n) + ") N(.,2)");
    }
    return o;
}

Outcome bounds_check() {
    Outcome o;
    std::size_t upper_checked = 0, dominance_checked = 0;
    auto upper = [&](const std::string& name, const GraphReport& rep, bool must_attain) {
        if (!rep.k || *rep.k < 2 || *rep.k > rep.v - 2 || rep.lambda > *rep.k - 2) return;
        const auto b = make_bound_report(name, "upper", BoundReport::Direction::Upper, ball_overlap_upper_bound(rep.v, *rep.k, rep.lambda), rep.n_r.at(1));
        o.expect(b.satisfied, name + " upper bound violated");
        if (must_attain) o.expect(b.attained, name + " upper bound not attained");
        ++upper_checked;
    };
    for (int t = 2; t <= 3; ++t) {
        for (int m = 2; m <= 3; ++m) {
            const auto g = SmallGraph::complete_multipartite(t, m);
            upper(g.name(), small_graph_report(g, 1), true);
        }
    }
    for (int n = 2; n <= 4; ++n) {
        for (int q = 2; q <= 3; ++q) upper("hamming", small_graph_report(SmallGraph::hamming(n, q), 1), false);
    }
    for (int n = 4; n <= 8; ++n) {
        for (int e = 2; e <= n - 2; ++e) upper("johnson", small_graph_report(SmallGraph::johnson(n, e), 1), false);
    }
    for (auto kind : kKinds) {
        for (int n = 3; n <= 6; ++n) {
            const auto g = GeneratorSet::make(kind, n);
            const auto rep = cayley_graph_report(g, 2, options());
            upper(tag(kind, n), rep, false);
            const Int n1 = rep.n_r.at(1);
            const Int n2 = rep.n_s.at(2).value_or(0);
            const auto low = make_bound_report(tag(kind, n), "lower", BoundReport::Direction::Lower, distance_two_lower_bound(*rep.k, rep.mu, n1), n2);
            o.expect(low.satisfied, tag(kind, n) + " lower bound violated: N_2 = " + std::to_string(n2) + " < " + to_string(low.value));
            if (kind == GeneratorKind::Adjacent && n >= 4) {
                o.expect(low.attained && n2 == 2 * *rep.k, tag(kind, n) + " N_2 = 2k not attained");
            }
            const auto cycles = girth_cycle_check(g, {3, 5});
            if (overlap_dominance_applicable(*rep.k, rep.mu, cycles.at(3), cycles.at(5)).applicable) {
                o.expect(n2 >= rep.n_s.at(1).value_or(0), tag(kind, n) + " N_2 < N_1 under the dominance premises");
                ++dominance_checked;
            }
        }
    }
    o.note = std::to_string(upper_checked) + " upper-bound graphs, " + std::to_string(dominance_checked) + " dominance instances";
    return o;
}

Outcome reconstruction_check() {
    Outcome o;
    double worst = 0;
    for (auto kind : kKinds) {
        const auto g = GeneratorSet::make(kind, 5);
        const auto t0 = Clock::now();
        for (int r = 1; r <= 2; ++r) {
            ExperimentConfig cfg{g, r, kReconstructionTrials, kReconstructionSeed, std::nullopt, ExperimentMode::Honest, ErrorCountPolicy::UniformUpToR, options()};
            const auto s = run_experiment(cfg);
            o.expect(s.unique == s.trials && s.soundness_violations == 0, tag(kind, 5) + " r=" + std::to_string(r) + " unique " + std::to_string(s.unique) + "/" + std::to_string(s.trials));
            o.expect_eq(static_cast<Int>(s.m), s.reconstruction_number + 1, tag(kind, 5) + " m");
            cfg.metric.workers = 1;
            cfg.trials = 100;
            const auto a = run_experiment(cfg);
            const auto b = run_experiment(cfg);
            o.expect(to_json(a).dump() == to_json(b).dump(), tag(kind, 5) + " not deterministic");
            const auto w = ambiguity_witness(g, r, options());
            const auto res = reconstruct(w.patterns, r, g);
            o.expect(static_cast<Int>(w.patterns.size()) == s.reconstruction_number && res.status == ReconstructionStatus::Ambiguous, tag(kind, 5) + " r=" + std::to_string(r) + " ambiguity witness");
        }
        const double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        o.expect(dt < kBudgetReconstructionPerGraph, tag(kind, 5) + " runtime over budget");
    }
    o.note = std::to_string(kReconstructionTrials) + " trials per case, slowest graph " + std::to_string(worst).substr(0, 5) + " s";
    return o;
}

Outcome probe_check() {
    Outcome o;
    for (auto [r, n] : {std::pair{2, 5}, std::pair{2, 6}, std::pair{3, 7}}) {
        const auto p = probe_three_cycle_conjecture(n, r, options());
        o.expect(!p.attaining_classes.empty(), "no attaining class at n=" + std::to_string(n));
        std::string classes;
        for (const auto& c : p.attaining_classes) classes += (classes.empty() ? "" : ",") + c;
        o.note += std::string(o.note.empty() ? "" : "; ") + "r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " + std::to_string(p.value) + " by " + classes + (p.three_cycle_attains ? " (3-cycle attains)" : " (3-cycle does not attain)");
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"transposition-N1", transposition_n1},
        {"transposition-N2", transposition_n2},
        {"transposition-Ns-table", transposition_ns_table_check},
        {"bubble-star-N-values", bubble_star_values},
        {"lambda-mu", lambda_mu_check},
        {"local-parameters", local_params_check},
        {"factorization-counts", denes_check},
        {"class-sizes-spheres", classes_check},
        {"diameters", diameter_check},
        {"structure", structure_check},
        {"distance-regularity", distance_regular_check},
        {"hamming-johnson-closed-forms", closed_forms_check},
        {"bounds", bounds_check},
        {"reconstruction-experiments", reconstruction_check},
        {"conjecture-probe (informational)", probe_check},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        std::printf("%s  %-34s %7.2f s", out.pass ? "PASS" : "FAIL", name.c_str(), dt);
        if (!out.note.empty()) std::printf("  [%s]", out.note.c_str());
        std::printf("\n");
        const std::size_t shown = std::min<std::size_t>(out.failures.size(), 8);
        for (std::size_t i = 0; i < shown; ++i) std::printf("        %s\n", out.failures[i].c_str());
        if (out.failures.size() > shown) std::printf("        ... %zu more\n", out.failures.size() - shown);
        failed += out.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
