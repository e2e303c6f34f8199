#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/ball.hpp"
#include "permrec/ball_cache.hpp"
#include "permrec/cycle_type.hpp"
#include "permrec/generators.hpp"
#include "permrec/limits.hpp"
#include "permrec/parallel.hpp"
#include "permrec/permutation.hpp"

namespace permrec {

struct MetricOptions {
    SearchLimits limits{};
    int workers = 1;
    /// Scan one representative per conjugacy class when the generator set is
    /// closed under conjugation (intersection sizes are then class functions).
    bool class_reduction = true;
    const BallCache* cache = nullptr;
};

/// Shortest-path distance in Cay(Sym_n, S) by bidirectional breadth-first
/// search from e toward x^{-1} y.
inline int distance(const Permutation& x, const Permutation& y, const GeneratorSet& g,
                    const SearchLimits& limits = {}) {
    if (x.degree() != y.degree()) throw DegreeMismatch(x.degree(), y.degree());
    if (x.degree() != g.degree()) throw DegreeMismatch(x.degree(), g.degree());
    const Permutation target = left_quotient(x, y);
    if (target.is_identity()) return 0;

    std::unordered_set<std::uint64_t> seen_fwd{Permutation::identity(g.degree()).packed()};
    std::unordered_set<std::uint64_t> seen_bwd{target.packed()};
    std::vector<Permutation> front_fwd{Permutation::identity(g.degree())};
    std::vector<Permutation> front_bwd{target};
    int depth_fwd = 0;
    int depth_bwd = 0;
    while (!front_fwd.empty() && !front_bwd.empty()) {
        // The first meeting found while expanding a full level is at the exact distance.
        const bool forward = front_fwd.size() <= front_bwd.size();
        auto& front = forward ? front_fwd : front_bwd;
        auto& seen = forward ? seen_fwd : seen_bwd;
        const auto& other = forward ? seen_bwd : seen_fwd;
        std::vector<Permutation> next;
        for (const auto& p : front) {
            for (std::size_t s = 0; s < g.size(); ++s) {
                const Permutation q = g.neighbor(p, s);
                if (other.contains(q.packed())) return depth_fwd + depth_bwd + 1;
                if (seen.insert(q.packed()).second) next.push_back(q);
            }
        }
        if (seen_fwd.size() + seen_bwd.size() > limits.max_ball_size) {
            throw CapacityExceeded("distance search exceeds " + std::to_string(limits.max_ball_size) + " vertices");
        }
        front = std::move(next);
        (forward ? depth_fwd : depth_bwd) += 1;
    }
    throw Unreachable(to_string(y) + " is not reachable from " + to_string(x));
}

/// B_r(e), read from / written to the cache when one is configured.
inline MetricBall identity_ball(const GeneratorSet& g, int r, const MetricOptions& opts = {}) {
    if (opts.cache) {
        if (auto cached = opts.cache->load(g, r)) return *std::move(cached);
    }
    MetricBall b = ball(Permutation::identity(g.degree()), r, g, opts.limits);
    if (opts.cache) opts.cache->store(g, b);
    return b;
}

/// |B_r(e) ∩ B_r(y)| given br = B_r(e): w is in both iff w^{-1} y is in B_r(e).
inline Int identity_overlap(const MetricBall& br, const Permutation& y) {
    Int count = 0;
    for (const auto& w : br.members()) count += br.contains(left_quotient(w, y)) ? 1 : 0;
    return count;
}

struct NsResult {
    Int value = 0;
    /// Every scanned y attaining the maximum (class representatives when the
    /// scan was class-reduced).
    std::vector<Permutation> witnesses;
    std::size_t scanned = 0;
    bool class_reduced = false;
};

namespace detail {

inline std::optional<NsResult> n_s_from_balls(const GeneratorSet& g, const MetricBall& br, const MetricBall& outer,
                                              int s, const MetricOptions& opts) {
    if (s < 1 || s > outer.radius()) throw DomainError("distance s outside the precomputed ball");
    const auto sphere = outer.sphere(s);
    if (sphere.empty()) return std::nullopt;

    NsResult result;
    std::vector<Permutation> candidates;
    if (opts.class_reduction && g.is_conjugation_closed()) {
        result.class_reduced = true;
        std::vector<CycleType> seen_types;
        for (const auto& y : sphere) {
            CycleType ct = cycle_type(y);
            if (std::find(seen_types.begin(), seen_types.end(), ct) == seen_types.end()) {
                seen_types.push_back(std::move(ct));
                candidates.push_back(y);
            }
        }
    } else {
        candidates.assign(sphere.begin(), sphere.end());
    }

    std::vector<Int> values(candidates.size());
    parallel_for(candidates.size(), opts.workers, [&](std::size_t i) { values[i] = identity_overlap(br, candidates[i]); });

    result.scanned = candidates.size();
    result.value = *std::max_element(values.begin(), values.end());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (values[i] == result.value) result.witnesses.push_back(candidates[i]);
    }
    return result;
}

} // namespace detail

/// N_s(Γ, r) = max |B_r(x) ∩ B_r(y)| over d(x, y) = s, with x fixed to e by
/// vertex-transitivity. Empty sphere S_s(e) gives nullopt (absent, not zero).
inline std::optional<NsResult> n_s_value(const GeneratorSet& g, int r, int s, const MetricOptions& opts = {}) {
    if (r < 1) throw DomainError("radius must be positive");
    if (s < 1 || s > 2 * r) throw DomainError("s must lie in 1..2r");
    const MetricBall br = identity_ball(g, r, opts);
    const MetricBall outer = identity_ball(g, std::max(r, s), opts);
    return detail::n_s_from_balls(g, br, outer, s, opts);
}

struct NResult {
    Int value = 0;
    std::vector<int> attaining_s;
    std::map<int, std::optional<NsResult>> per_s;
};

/// N(Γ, r) = max over 1 <= s <= 2r of N_s(Γ, r).
inline NResult n_value(const GeneratorSet& g, int r, const MetricOptions& opts = {}) {
    if (r < 1) throw DomainError("radius must be positive");
    const MetricBall br = identity_ball(g, r, opts);
    const MetricBall outer = identity_ball(g, 2 * r, opts);
    NResult out;
    for (int s = 1; s <= 2 * r; ++s) {
        auto ns = detail::n_s_from_balls(g, br, outer, s, opts);
        if (ns) out.value = std::max(out.value, ns->value);
        out.per_s.emplace(s, std::move(ns));
    }
    for (const auto& [s, ns] : out.per_s) {
        if (ns && ns->value == out.value) out.attaining_s.push_back(s);
    }
    return out;
}

struct LambdaMu {
    Int lambda = 0;
    Int mu = 0;
    friend bool operator==(const LambdaMu&, const LambdaMu&) = default;
};

/// λ and μ from generator products alone: λ is the largest number of ordered
/// pairs (s_i, s_j) with s_i s_j = s for s in S, μ the largest such count for
/// products outside S ∪ {e}.
inline LambdaMu lambda_mu(const GeneratorSet& g) {
    std::unordered_map<std::uint64_t, Int> reps;
    for (const auto& a : g.elements()) {
        for (const auto& b : g.elements()) ++reps[compose(a, b).packed()];
    }
    std::unordered_set<std::uint64_t> in_s;
    for (const auto& s : g.elements()) in_s.insert(s.packed());
    const auto e = Permutation::identity(g.degree()).packed();
    LambdaMu out;
    for (const auto& [code, count] : reps) {
        if (code == e) continue;
        if (in_s.contains(code)) {
            out.lambda = std::max(out.lambda, count);
        } else {
            out.mu = std::max(out.mu, count);
        }
    }
    return out;
}

/// S_i = S^i \ (S^{i-1} ∪ ... ∪ S^0) for i = 0..max_i, computed from product
/// sets without any graph traversal. Each sphere is sorted.
inline std::vector<std::vector<Permutation>> product_spheres(const GeneratorSet& g, int max_i) {
    std::vector<std::vector<Permutation>> spheres;
    std::unordered_set<std::uint64_t> earlier;
    std::vector<Permutation> power{Permutation::identity(g.degree())}; // S^i
    for (int i = 0; i <= max_i; ++i) {
        if (i > 0) {
            std::unordered_set<std::uint64_t> next_codes;
            std::vector<Permutation> next;
            for (const auto& p : power) {
                for (const auto& s : g.elements()) {
                    const Permutation q = compose(p, s);
                    if (next_codes.insert(q.packed()).second) next.push_back(q);
                }
            }
            power = std::move(next);
        }
        std::vector<Permutation> sphere;
        for (const auto& p : power) {
            if (!earlier.contains(p.packed())) sphere.push_back(p);
        }
        for (const auto& p : power) earlier.insert(p.packed());
        std::sort(sphere.begin(), sphere.end());
        spheres.push_back(std::move(sphere));
    }
    return spheres;
}

/// Neighbors of π one step closer to (c), level with (a), and farther from (b) e.
struct LocalParams {
    int distance = 0;
    Int c = 0;
    Int a = 0;
    Int b = 0;
    friend bool operator==(const LocalParams&, const LocalParams&) = default;
};

inline LocalParams local_params(const Permutation& pi, const GeneratorSet& g, const DistanceTable& table) {
    LocalParams out;
    out.distance = table.distance_from_identity(pi);
    for (std::size_t s = 0; s < g.size(); ++s) {
        const int d = table.distance_from_identity(g.neighbor(pi, s));
        if (d == out.distance - 1) {
            ++out.c;
        } else if (d == out.distance) {
            ++out.a;
        } else {
            ++out.b;
        }
    }
    return out;
}

inline LocalParams local_params(const Permutation& pi, const GeneratorSet& g, const SearchLimits& limits = {}) {
    const Permutation e = Permutation::identity(g.degree());
    LocalParams out;
    out.distance = distance(e, pi, g, limits);
    for (std::size_t s = 0; s < g.size(); ++s) {
        const int d = distance(e, g.neighbor(pi, s), g, limits);
        if (d == out.distance - 1) {
            ++out.c;
        } else if (d == out.distance) {
            ++out.a;
        } else {
            ++out.b;
        }
    }
    return out;
}

/// Eccentricity of e, i.e. the diameter of the (vertex-transitive) graph.
inline int diameter(const GeneratorSet& g, const SearchLimits& limits = {}) {
    DistanceTable table(g, limits);
    if (!table.connected()) throw Unreachable("generator set does not generate Sym_n");
    return table.eccentricity();
}

inline bool generates_symmetric_group(const GeneratorSet& g, const SearchLimits& limits = {}) {
    return DistanceTable(g, limits).connected();
}

} // namespace permrec
