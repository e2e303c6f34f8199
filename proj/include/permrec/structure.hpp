#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/ball.hpp"
#include "permrec/generators.hpp"
#include "permrec/limits.hpp"
#include "permrec/permutation.hpp"

namespace permrec {

/// Two vertices at the same distance i from x whose (c_i, b_i) differ.
struct RegularityWitness {
    std::string x;
    std::string y1;
    std::string y2;
    int distance = 0;
    Int c1 = 0, b1 = 0;
    Int c2 = 0, b2 = 0;
};

struct RegularityResult {
    bool distance_regular = false;
    /// (c_i, b_i) for i = 0..diameter when the graph is distance-regular.
    std::vector<std::pair<Int, Int>> intersection_array;
    std::optional<RegularityWitness> witness;
};

namespace detail {

/// Folds one (x, y) observation into the per-distance table; returns a
/// witness on the first disagreement.
inline std::optional<RegularityWitness> record_params(std::vector<std::optional<std::pair<Int, Int>>>& table,
                                                      std::vector<std::string>& first_vertex, int i, Int c, Int b,
                                                      const std::string& x, const std::string& y) {
    if (table.size() <= static_cast<std::size_t>(i)) {
        table.resize(i + 1);
        first_vertex.resize(i + 1);
    }
    if (!table[i]) {
        table[i] = std::pair{c, b};
        first_vertex[i] = y;
        return std::nullopt;
    }
    if (table[i]->first != c || table[i]->second != b) {
        return RegularityWitness{x, first_vertex[i], y, i, table[i]->first, table[i]->second, c, b};
    }
    return std::nullopt;
}

} // namespace detail

/// Distance-regularity of Cay(Sym_n, S). Checking pairs (e, y) suffices by
/// vertex-transitivity.
inline RegularityResult is_distance_regular(const GeneratorSet& g, const SearchLimits& limits = {}) {
    DistanceTable table(g, limits);
    if (!table.connected()) throw Unreachable("generator set does not generate Sym_n");
    std::vector<std::optional<std::pair<Int, Int>>> params;
    std::vector<std::string> first;
    const std::string e = to_string(Permutation::identity(g.degree()));
    for (int i = 0; i <= table.eccentricity(); ++i) {
        for (const auto& y : table.sphere(i)) {
            Int c = 0;
            Int b = 0;
            for (std::size_t s = 0; s < g.size(); ++s) {
                const int d = table.distance_from_identity(g.neighbor(y, s));
                c += d == i - 1 ? 1 : 0;
                b += d == i + 1 ? 1 : 0;
            }
            if (auto w = detail::record_params(params, first, i, c, b, e, to_string(y))) {
                return RegularityResult{false, {}, std::move(w)};
            }
        }
    }
    RegularityResult out{true, {}, std::nullopt};
    for (const auto& p : params) out.intersection_array.push_back(*p);
    return out;
}

/// For every requested length L >= 3, whether Cay(Sym_n, S) contains a cycle
/// of length L. Searches simple closed walks through e (vertex-transitivity).
inline std::map<int, bool> girth_cycle_check(const GeneratorSet& g, const std::set<int>& lengths,
                                             const SearchLimits& limits = {}) {
    if (g.degree() > limits.max_whole_graph_degree) {
        throw CapacityExceeded("cycle search limited to degree " + std::to_string(limits.max_whole_graph_degree));
    }
    const Permutation e = Permutation::identity(g.degree());
    std::unordered_set<std::uint64_t> neighbors_of_e;
    for (std::size_t s = 0; s < g.size(); ++s) neighbors_of_e.insert(g.neighbor(e, s).packed());

    std::map<int, bool> out;
    for (int len : lengths) {
        if (len < 3) throw DomainError("cycle length must be at least 3");
        std::vector<Permutation> path{e};
        auto dfs = [&](auto&& self) -> bool {
            const auto& last = path.back();
            if (static_cast<int>(path.size()) == len) return neighbors_of_e.contains(last.packed());
            for (std::size_t s = 0; s < g.size(); ++s) {
                const Permutation next = g.neighbor(last, s);
                if (std::find(path.begin(), path.end(), next) != path.end()) continue;
                path.push_back(next);
                const bool found = self(self);
                path.pop_back();
                if (found) return true;
            }
            return false;
        };
        out[len] = dfs(dfs);
    }
    return out;
}

/// Number of K_{p,q} subgraphs (not necessarily induced) that contain `at`.
inline Int complete_bipartite_count(const GeneratorSet& g, int p, int q, const Permutation& at) {
    if (p < 1 || q < 1 || p > 4 || q > 4) throw DomainError("K_{p,q} search supports 1 <= p, q <= 4");
    if (at.degree() != g.degree()) throw DegreeMismatch(at.degree(), g.degree());
    std::vector<Permutation> nbrs;
    for (std::size_t s = 0; s < g.size(); ++s) nbrs.push_back(g.neighbor(at, s));
    auto neighbor_set = [&](const Permutation& x) {
        std::unordered_set<std::uint64_t> out;
        for (std::size_t s = 0; s < g.size(); ++s) out.insert(g.neighbor(x, s).packed());
        return out;
    };
    std::vector<std::unordered_set<std::uint64_t>> nbr_sets;
    for (const auto& x : nbrs) nbr_sets.push_back(neighbor_set(x));

    // `at` lies in the side of size `own`; the other side (size `other`) is a
    // subset of N(at), and the rest of at's side is drawn from the common
    // neighbours of that subset.
    auto count_with_sides = [&](int own, int other) {
        Int total = 0;
        if (other > static_cast<int>(nbrs.size())) return total;
        std::vector<int> idx(other);
        for (int i = 0; i < other; ++i) idx[i] = i;
        while (true) {
            Int common = 0;
            for (const auto& code : nbr_sets[idx[0]]) {
                if (code == at.packed()) continue;
                bool all = true;
                for (int i = 1; i < other && all; ++i) all = nbr_sets[idx[i]].contains(code);
                common += all ? 1 : 0;
            }
            total = checked_add(total, binomial(common, own - 1));
            int k = other - 1;
            while (k >= 0 && idx[k] == static_cast<int>(nbrs.size()) - other + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int i = k + 1; i < other; ++i) idx[i] = idx[i - 1] + 1;
        }
        return total;
    };
    Int total = count_with_sides(p, q);
    if (p != q) total = checked_add(total, count_with_sides(q, p));
    return total;
}

} // namespace permrec
