#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "permrec/ball.hpp"
#include "permrec/errors.hpp"
#include "permrec/generators.hpp"
#include "permrec/graph_report.hpp"
#include "permrec/metric.hpp"
#include "permrec/parallel.hpp"
#include "permrec/permutation.hpp"
#include "permrec/rng.hpp"

namespace permrec {

enum class Distinctness { RequireDistinct, AllowRepeats };

/// How many generator applications a pattern receives.
enum class ErrorCountPolicy {
    UniformUpToR, // j uniform on 0..r
    ExactlyR,     // j = r; the result may still be closer than r
};

/// A channel that right-multiplies its input by up to r random generators.
struct ChannelSpec {
    GeneratorSet generators;
    int max_errors = 1;
    std::uint64_t seed = 0;
    Distinctness distinctness = Distinctness::RequireDistinct;
    ErrorCountPolicy policy = ErrorCountPolicy::UniformUpToR;
};

/// Draw number `draw_index` of the channel applied to x. Depends only on
/// (x, spec, draw_index).
inline Permutation distort(const Permutation& x, const ChannelSpec& spec, std::uint64_t draw_index = 0) {
    if (spec.max_errors < 0) throw DomainError("negative error count");
    if (x.degree() != spec.generators.degree()) throw DegreeMismatch(x.degree(), spec.generators.degree());
    Engine rng(derive_seed(spec.seed, draw_index));
    const auto r = static_cast<std::uint64_t>(spec.max_errors);
    const std::uint64_t steps = spec.policy == ErrorCountPolicy::ExactlyR ? r : uniform_below(rng, r + 1);
    Permutation y = x;
    for (std::uint64_t i = 0; i < steps; ++i) {
        y = spec.generators.neighbor(y, static_cast<std::size_t>(uniform_below(rng, spec.generators.size())));
    }
    return y;
}

/// m patterns of x, all inside B_r(x). Under RequireDistinct, duplicates are
/// rejected; once rejections stall, the remaining patterns are taken from a
/// seeded shuffle of the ball itself.
inline std::vector<Permutation> generate_patterns(const Permutation& x, const ChannelSpec& spec, std::size_t m,
                                                  const SearchLimits& limits = {}) {
    const MetricBall unit = ball(Permutation::identity(spec.generators.degree()), spec.max_errors, spec.generators,
                                 limits);
    if (spec.distinctness == Distinctness::RequireDistinct && m > unit.size()) {
        throw DomainError("cannot draw " + std::to_string(m) + " distinct patterns from a ball of " +
                          std::to_string(unit.size()));
    }
    std::vector<Permutation> out;
    out.reserve(m);
    std::unordered_set<std::uint64_t> chosen;
    const std::size_t stall_limit = std::max<std::size_t>(64, 4 * unit.size());
    std::size_t stalled = 0;
    std::uint64_t draw = 0;
    while (out.size() < m && stalled < stall_limit) {
        Permutation p = distort(x, spec, draw++);
        if (spec.distinctness == Distinctness::RequireDistinct && !chosen.insert(p.packed()).second) {
            ++stalled;
            continue;
        }
        stalled = 0;
        out.push_back(p);
    }
    if (out.size() < m) {
        std::vector<Permutation> rest;
        for (const auto& w : unit.members()) {
            Permutation p = compose(x, w);
            if (!chosen.contains(p.packed())) rest.push_back(p);
        }
        Engine rng(derive_seed(spec.seed, ~std::uint64_t{0}));
        for (std::size_t i = rest.size(); i > 1; --i) {
            std::swap(rest[i - 1], rest[static_cast<std::size_t>(uniform_below(rng, i))]);
        }
        for (std::size_t i = 0; out.size() < m; ++i) out.push_back(rest[i]);
    }
    for (const auto& p : out) {
        if (!unit.contains(left_quotient(x, p))) throw Error("pattern " + to_string(p) + " left the ball");
    }
    return out;
}

enum class ReconstructionStatus { Unique, Ambiguous, Inconsistent };

inline std::string_view to_string(ReconstructionStatus s) {
    switch (s) {
    case ReconstructionStatus::Unique: return "unique";
    case ReconstructionStatus::Ambiguous: return "ambiguous";
    case ReconstructionStatus::Inconsistent: return "inconsistent";
    }
    return "?";
}

struct ReconstructionResult {
    /// Sorted; every x with all patterns inside B_r(x).
    std::vector<Permutation> candidates;
    ReconstructionStatus status = ReconstructionStatus::Inconsistent;
    std::size_t patterns_used = 0;
};

/// Intersects the radius-r balls around a list of patterns. B_r(e) is built
/// once; all balls of a Cayley graph have its size, so the first pattern's
/// ball is expanded and filtered by d(c, y_i) <= r, i.e. c^{-1} y_i ∈ B_r(e).
class Reconstructor {
public:
    Reconstructor(const GeneratorSet& g, int r, const SearchLimits& limits = {})
        : r_(r), unit_(ball(Permutation::identity(g.degree()), r, g, limits)) {}

    int radius() const noexcept { return r_; }
    const MetricBall& unit_ball() const noexcept { return unit_; }

    ReconstructionResult operator()(std::span<const Permutation> patterns) const {
        if (patterns.empty()) throw DomainError("no patterns given");
        const int n = unit_.context().degree;
        for (const auto& p : patterns) {
            if (p.degree() != n) throw DegreeMismatch(p.degree(), n);
        }
        ReconstructionResult out;
        out.patterns_used = patterns.size();
        for (const auto& w : unit_.members()) {
            const Permutation c = compose(patterns[0], w);
            const Permutation c_inv = c.inverse();
            bool inside = true;
            for (std::size_t i = 1; i < patterns.size() && inside; ++i) {
                inside = unit_.contains(compose(c_inv, patterns[i]));
            }
            if (inside) out.candidates.push_back(c);
        }
        std::sort(out.candidates.begin(), out.candidates.end());
        out.status = out.candidates.empty()        ? ReconstructionStatus::Inconsistent
                     : out.candidates.size() == 1 ? ReconstructionStatus::Unique
                                                  : ReconstructionStatus::Ambiguous;
        return out;
    }

private:
    int r_;
    MetricBall unit_;
};

inline ReconstructionResult reconstruct(std::span<const Permutation> patterns, int r, const GeneratorSet& g,
                                        const SearchLimits& limits = {}) {
    if (patterns.empty()) throw DomainError("no patterns given");
    return Reconstructor(g, r, limits)(patterns);
}

/// x = e and y attaining N(Γ, r), with patterns = B_r(e) ∩ B_r(y): N(Γ, r)
/// distinct patterns that cannot tell e from y.
struct AmbiguityWitness {
    Permutation x;
    Permutation y;
    std::vector<Permutation> patterns;
};

inline AmbiguityWitness ambiguity_witness(const GeneratorSet& g, int r, const MetricOptions& opts = {}) {
    const NResult n = n_value(g, r, opts);
    if (n.attaining_s.empty()) throw DomainError("graph has no pair of distinct vertices");
    const Permutation y = n.per_s.at(n.attaining_s.front())->witnesses.front();
    const MetricBall bx = identity_ball(g, r, opts);
    AmbiguityWitness w{Permutation::identity(g.degree()), y, {}};
    for (const auto& m : bx.members()) {
        if (bx.contains(left_quotient(m, y))) w.patterns.push_back(m);
    }
    std::sort(w.patterns.begin(), w.patterns.end());
    return w;
}

enum class ExperimentMode {
    Honest,      // channel output
    Adversarial, // translates of a maximal ball intersection
};

struct ExperimentConfig {
    GeneratorSet generators;
    int r = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    /// Defaults to N(Γ, r) + 1 (honest) or N(Γ, r) (adversarial).
    std::optional<std::size_t> m;
    ExperimentMode mode = ExperimentMode::Honest;
    ErrorCountPolicy policy = ErrorCountPolicy::UniformUpToR;
    MetricOptions metric{};
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    Permutation source;
    std::vector<Permutation> patterns;
    ReconstructionStatus status = ReconstructionStatus::Inconsistent;
    std::size_t candidate_count = 0;
    bool source_in_candidates = false;
    /// Shortest prefix of `patterns` that already reconstructs uniquely.
    std::optional<std::size_t> min_unique_m;
};

struct ExperimentSummary {
    int n = 0;
    std::string generator_kind;
    int r = 0;
    std::string mode;
    std::uint64_t seed = 0;
    Int reconstruction_number = 0; // measured N(Γ, r)
    std::size_t m = 0;
    std::size_t trials = 0;
    std::size_t unique = 0;
    std::size_t ambiguous = 0;
    std::size_t inconsistent = 0;
    std::size_t soundness_violations = 0;
    std::optional<std::size_t> min_unique_m_min;
    std::optional<std::size_t> min_unique_m_max;
    double min_unique_m_mean = 0.0;
    std::vector<TrialRecord> records;

    double unique_rate() const { return trials == 0 ? 0.0 : static_cast<double>(unique) / static_cast<double>(trials); }
};

/// Seeded reconstruction trials. Trial i draws everything from the stream
/// derive_seed(seed, i), so results do not depend on `metric.workers`.
inline ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
    const GeneratorSet& g = cfg.generators;
    const int n = g.degree();
    const AmbiguityWitness witness = ambiguity_witness(g, cfg.r, cfg.metric);
    const auto big_n = static_cast<Int>(witness.patterns.size());
    const Reconstructor rec(g, cfg.r, cfg.metric.limits);

    ExperimentSummary sum;
    sum.n = n;
    sum.generator_kind = std::string(short_name(g.kind()));
    sum.r = cfg.r;
    sum.mode = cfg.mode == ExperimentMode::Honest ? "honest" : "adversarial";
    sum.seed = cfg.seed;
    sum.reconstruction_number = big_n;
    sum.m = cfg.m.value_or(static_cast<std::size_t>(cfg.mode == ExperimentMode::Honest ? big_n + 1 : big_n));
    sum.trials = cfg.trials;
    if (cfg.mode == ExperimentMode::Adversarial && sum.m > witness.patterns.size()) {
        throw DomainError("adversarial mode supports m <= N(Γ, r)");
    }

    sum.records.resize(cfg.trials);
    const auto order = static_cast<std::uint64_t>(factorial(n));
    parallel_for(cfg.trials, cfg.metric.workers, [&](std::size_t t) {
        TrialRecord& rec_t = sum.records[t];
        rec_t.trial = t;
        rec_t.seed = derive_seed(cfg.seed, t);
        Engine rng(rec_t.seed);
        rec_t.source = unrank(n, uniform_below(rng, order));
        if (cfg.mode == ExperimentMode::Honest) {
            ChannelSpec spec{g, cfg.r, derive_seed(rec_t.seed, 1), Distinctness::RequireDistinct, cfg.policy};
            rec_t.patterns = generate_patterns(rec_t.source, spec, sum.m, cfg.metric.limits);
        } else {
            for (std::size_t i = 0; i < sum.m; ++i) rec_t.patterns.push_back(compose(rec_t.source, witness.patterns[i]));
        }
        const ReconstructionResult res = rec(rec_t.patterns);
        rec_t.status = res.status;
        rec_t.candidate_count = res.candidates.size();
        rec_t.source_in_candidates = std::binary_search(res.candidates.begin(), res.candidates.end(), rec_t.source);
        for (std::size_t k = 1; k <= rec_t.patterns.size(); ++k) {
            if (rec(std::span<const Permutation>(rec_t.patterns).first(k)).status == ReconstructionStatus::Unique) {
                rec_t.min_unique_m = k;
                break;
            }
        }
    });

    std::size_t with_min = 0;
    double total_min = 0.0;
    for (const auto& t : sum.records) {
        sum.unique += t.status == ReconstructionStatus::Unique ? 1 : 0;
        sum.ambiguous += t.status == ReconstructionStatus::Ambiguous ? 1 : 0;
        sum.inconsistent += t.status == ReconstructionStatus::Inconsistent ? 1 : 0;
        sum.soundness_violations += t.source_in_candidates ? 0 : 1;
        if (t.min_unique_m) {
            ++with_min;
            total_min += static_cast<double>(*t.min_unique_m);
            sum.min_unique_m_min = std::min(sum.min_unique_m_min.value_or(*t.min_unique_m), *t.min_unique_m);
            sum.min_unique_m_max = std::max(sum.min_unique_m_max.value_or(*t.min_unique_m), *t.min_unique_m);
        }
    }
    sum.min_unique_m_mean = with_min == 0 ? 0.0 : total_min / static_cast<double>(with_min);
    return sum;
}

inline Json to_json(const TrialRecord& t) {
    Json j;
    j["trial"] = t.trial;
    j["seed"] = t.seed;
    j["source"] = to_string(t.source);
    Json pats = Json::array();
    for (const auto& p : t.patterns) pats.push_back(to_string(p));
    j["patterns"] = std::move(pats);
    j["status"] = std::string(to_string(t.status));
    j["candidates"] = t.candidate_count;
    j["min_unique_m"] = optional_json(t.min_unique_m);
    return j;
}

inline Json to_json(const ExperimentSummary& s) {
    Json j;
    j["n"] = s.n;
    j["generator_kind"] = s.generator_kind;
    j["r"] = s.r;
    j["mode"] = s.mode;
    j["seed"] = s.seed;
    j["reconstruction_number"] = s.reconstruction_number;
    j["m"] = s.m;
    j["trials"] = s.trials;
    j["unique"] = s.unique;
    j["ambiguous"] = s.ambiguous;
    j["inconsistent"] = s.inconsistent;
    j["unique_rate"] = s.unique_rate();
    j["soundness_violations"] = s.soundness_violations;
    j["min_unique_m"] = {{"min", optional_json(s.min_unique_m_min)},
                         {"max", optional_json(s.min_unique_m_max)},
                         {"mean", s.min_unique_m_mean}};
    return j;
}

inline std::string experiment_csv_header() {
    return "graph,n,r,mode,seed,N,m,trials,unique,ambiguous,inconsistent,unique_rate,soundness_violations,"
           "min_unique_m_min,min_unique_m_max,min_unique_m_mean";
}

inline std::string experiment_csv_row(const ExperimentSummary& s) {
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    char rate[32];
    char mean[32];
    std::snprintf(rate, sizeof rate, "%.6f", s.unique_rate());
    std::snprintf(mean, sizeof mean, "%.4f", s.min_unique_m_mean);
    return s.generator_kind + "," + std::to_string(s.n) + "," + std::to_string(s.r) + "," + s.mode + "," +
           std::to_string(s.seed) + "," + std::to_string(s.reconstruction_number) + "," + std::to_string(s.m) + "," +
           std::to_string(s.trials) + "," + std::to_string(s.unique) + "," + std::to_string(s.ambiguous) + "," +
           std::to_string(s.inconsistent) + "," + rate + "," + std::to_string(s.soundness_violations) + "," +
           opt(s.min_unique_m_min) + "," + opt(s.min_unique_m_max) + "," + mean;
}

} // namespace permrec
