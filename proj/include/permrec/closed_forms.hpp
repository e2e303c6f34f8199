#pragma once

#include <map>
#include <optional>
#include <string>

#include "permrec/arith.hpp"
#include "permrec/cycle_type.hpp"
#include "permrec/errors.hpp"
#include "permrec/generators.hpp"
#include "permrec/graph_report.hpp"

// Exact evaluators for the closed-form reconstruction numbers and the bounds
// for regular graphs. Every formula carries the parameter range it is claimed
// for; outside that range the result is `no_claim` rather than a number.

namespace permrec {

/// A claimed value, or std::nullopt when nothing is claimed for the input.
using Claim = std::optional<Int>;
inline constexpr std::nullopt_t no_claim = std::nullopt;

/// N(L_n(q), r) = q * sum_{i<r} C(n-1, i) (q-1)^i.
inline Int hamming_N(int n, int q, int r) {
    if (n < 2 || q < 2 || r < 1) throw DomainError("hamming_N needs n >= 2, q >= 2, r >= 1");
    Int sum = 0;
    for (int i = 0; i < r; ++i) sum = checked_add(sum, checked_mul(binomial(n - 1, i), checked_pow(q - 1, i)));
    return checked_mul(q, sum);
}

/// N(J_e^n, r) = n * sum_{i<r} C(e-1, i) C(n-e-1, i) / (i+1). The summands
/// are rational; the total must be an integer.
inline Int johnson_N(int n, int e, int r) {
    if (n < 2 || e < 1 || e > n - 1 || r < 1) throw DomainError("johnson_N needs n >= 2, 1 <= e <= n-1, r >= 1");
    Rational sum(0);
    for (int i = 0; i < r; ++i) {
        sum += Rational(checked_mul(binomial(e - 1, i), binomial(n - e - 1, i)), i + 1);
    }
    const Rational total = sum * Rational(n);
    if (!is_integer(total)) throw DomainError("johnson_N evaluated to the non-integer " + to_string(total));
    return total.numerator();
}

/// Reconstruction number of the all-transpositions graph: 3 for r = 1 and
/// 3(n-2)(n+1)/2 for r = 2, both for n >= 3.
inline Claim transposition_N(int n, int r) {
    if (r != 1 && r != 2) throw DomainError("closed forms exist for r = 1, 2 only");
    if (n < 3) return no_claim;
    if (r == 1) return 3;
    const Int twice = checked_mul(3, checked_mul(n - 2, n + 1));
    if (twice % 2 != 0) throw DomainError("3(n-2)(n+1)/2 is not integral");
    return twice / 2;
}

/// N_s(Sym_n(T), 2) for s = 1..4 with their validity ranges:
/// n(n-1) and 3(n-2)(n+1)/2 for n >= 3, 12 for n >= 4, 20 for n >= 5.
inline std::map<int, Claim> transposition_ns_table(int n) {
    std::map<int, Claim> out{{1, no_claim}, {2, no_claim}, {3, no_claim}, {4, no_claim}};
    if (n >= 3) {
        out[1] = checked_mul(n, n - 1);
        out[2] = transposition_N(n, 2);
    }
    if (n >= 4) out[3] = 12;
    if (n >= 5) out[4] = 20;
    return out;
}

/// Bubble-sort (n >= 3) and star (n >= 4) graphs: N = 2 for r = 1 and
/// 2(n-1) for r = 2.
inline Claim bubble_star_N(GeneratorKind kind, int n, int r) {
    if (r != 1 && r != 2) throw DomainError("closed forms exist for r = 1, 2 only");
    int min_n = 0;
    if (kind == GeneratorKind::Adjacent) {
        min_n = 3;
    } else if (kind == GeneratorKind::Prefix) {
        min_n = 4;
    } else {
        throw DomainError("bubble_star_N covers the bubble-sort and star graphs only");
    }
    if (n < min_n) return no_claim;
    return r == 1 ? Int{2} : checked_mul(2, n - 1);
}

/// Claimed N_s(Γ, 2), s = 1..4, for the bubble-sort and star graphs.
///   bubble-sort: N_1 = N_2 = 2(n-1) (n >= 3), N_3 = 2 (n >= 4), N_4 = 4 (n >= 5)
///   star:        N_1 = 2(n-1) (n >= 4), N_2 = 2(n-1) (n >= 5), N_3 = 4 (n >= 4), N_4 = 4 (n >= 5)
inline std::map<int, Claim> bubble_star_ns_table(GeneratorKind kind, int n) {
    std::map<int, Claim> out{{1, no_claim}, {2, no_claim}, {3, no_claim}, {4, no_claim}};
    const Int two_k = checked_mul(2, n - 1);
    if (kind == GeneratorKind::Adjacent) {
        if (n >= 3) out[1] = out[2] = two_k;
        if (n >= 4) out[3] = 2;
        if (n >= 5) out[4] = 4;
    } else if (kind == GeneratorKind::Prefix) {
        if (n >= 4) out[1] = two_k;
        if (n >= 5) out[2] = two_k;
        if (n >= 4) out[3] = 4;
        if (n >= 5) out[4] = 4;
    } else {
        throw DomainError("bubble_star_ns_table covers the bubble-sort and star graphs only");
    }
    return out;
}

/// Claimed (λ, μ) per generator family: (0,3) for T, (0,2) for t, (0,1) for st.
inline std::pair<Int, Int> claimed_lambda_mu(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::AllTranspositions: return {0, 3};
    case GeneratorKind::Adjacent: return {0, 2};
    case GeneratorKind::Prefix: return {0, 1};
    case GeneratorKind::Explicit: break;
    }
    throw DomainError("no claimed parameters for explicit generator sets");
}

inline Claim claimed_diameter(GeneratorKind kind, int n) {
    if (n < 3) return no_claim;
    switch (kind) {
    case GeneratorKind::AllTranspositions: return n - 1;
    case GeneratorKind::Adjacent: return binomial(n, 2);
    case GeneratorKind::Prefix: return 3 * (n - 1) / 2;
    case GeneratorKind::Explicit: break;
    }
    return no_claim;
}

/// Local parameters of a permutation π in the all-transpositions graph,
/// measured from e: c = (sum_j j^2 h_j - n)/2, b = (n^2 - sum_j j^2 h_j)/2,
/// and a = 0.
struct TranspositionLocalParams {
    Int c = 0;
    Int a = 0;
    Int b = 0;
};

inline TranspositionLocalParams transposition_local_params(const CycleType& ct) {
    const Int n = ct.degree();
    const Int sq = ct.sum_of_squares();
    if ((sq - n) % 2 != 0) throw DomainError("cycle type gives a non-integral c");
    TranspositionLocalParams out{(sq - n) / 2, 0, (n * n - sq) / 2};
    if (out.c + out.b != binomial(n, 2)) throw DomainError("c + b differs from the valency");
    return out;
}

/// Upper bound N(Γ,1) <= (v + λ)/2 for connected k-regular graphs with
/// 2 <= k <= v-2 and 0 <= λ <= k-2.
inline Rational ball_overlap_upper_bound(Int v, Int k, Int lambda) {
    if (k < 2 || k > v - 2 || lambda < 0 || lambda > k - 2) {
        throw DomainError("upper bound needs 2 <= k <= v-2 and 0 <= lambda <= k-2");
    }
    return Rational(checked_add(v, lambda), 2);
}

/// λ + 2 can only reach (v + λ)/2 when λ = v-4 and k = v-2.
inline bool lambda_branch_can_attain(Int v, Int k, Int lambda) { return lambda == v - 4 && k == v - 2; }

/// Lower bound N_2(Γ,2) >= μ(k - 1 - 3/4 (μ-1)(N(Γ,1) - 2)) + 2, exact.
inline Rational distance_two_lower_bound(Int k, Int mu, Int n1) {
    if (mu < 1 || k < 2) throw DomainError("lower bound needs mu >= 1 and k >= 2");
    const Rational inner = Rational(k - 1) - Rational(3, 4) * Rational(checked_mul(mu - 1, n1 - 2));
    return Rational(mu) * inner + Rational(2);
}

/// The same bound rounded up, as applies to the integer N_2(Γ,2).
inline Int distance_two_lower_bound_integral(Int k, Int mu, Int n1) {
    return ceil(distance_two_lower_bound(k, mu, n1));
}

/// Premises for N_2(Γ,2) >= N_1(Γ,2): no triangles, no pentagons, μ >= 2 and
/// k >= 1 + 3/4 (μ-1) μ.
struct DominanceApplicability {
    bool applicable = false;
    std::string reason;
};

inline DominanceApplicability overlap_dominance_applicable(Int k, Int mu, bool has_triangle, bool has_pentagon) {
    if (has_triangle) return {false, "graph has triangles"};
    if (has_pentagon) return {false, "graph has pentagons"};
    if (mu < 2) return {false, "mu < 2"};
    if (Rational(k) < Rational(1) + Rational(3, 4) * Rational(checked_mul(mu - 1, mu))) {
        return {false, "k < 1 + 3/4 (mu-1) mu"};
    }
    return {true, "premises hold"};
}

struct BoundReport {
    enum class Direction { Upper, Lower };

    std::string graph;
    std::string bound;
    Direction direction = Direction::Upper;
    Rational value;
    Int measured = 0;
    bool satisfied = false;
    bool attained = false;
};

inline BoundReport make_bound_report(std::string graph, std::string bound, BoundReport::Direction dir,
                                     Rational value, Int measured) {
    BoundReport rep{std::move(graph), std::move(bound), dir, value, measured, false, false};
    const Rational m(measured);
    rep.satisfied = dir == BoundReport::Direction::Upper ? m <= value : m >= value;
    rep.attained = m == value;
    return rep;
}

inline Json to_json(const BoundReport& b) {
    Json j;
    j["graph"] = b.graph;
    j["bound"] = b.bound;
    j["direction"] = b.direction == BoundReport::Direction::Upper ? "upper" : "lower";
    j["value"] = to_string(b.value);
    j["measured"] = b.measured;
    j["satisfied"] = b.satisfied;
    j["attained"] = b.attained;
    return j;
}

} // namespace permrec
