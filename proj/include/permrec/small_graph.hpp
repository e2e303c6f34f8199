#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/ball.hpp"
#include "permrec/errors.hpp"
#include "permrec/generators.hpp"
#include "permrec/graph_report.hpp"
#include "permrec/structure.hpp"

namespace permrec {

inline constexpr std::size_t kMaxSmallGraphVertices = 50'000;

/// Simple undirected graph given by adjacency lists, used for the Hamming,
/// Johnson and complete multipartite families and for edge-list imports.
class SmallGraph {
public:
    explicit SmallGraph(std::size_t vertices, std::string name = "graph") : adj_(vertices), name_(std::move(name)) {
        if (vertices == 0) throw DomainError("graph needs at least one vertex");
        if (vertices > kMaxSmallGraphVertices) throw CapacityExceeded("small graphs are limited to 50000 vertices");
    }

    /// Throws DomainError on self-loops, repeated edges, or bad endpoints.
    void add_edge(std::size_t u, std::size_t v) {
        if (u >= adj_.size() || v >= adj_.size()) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) {
            throw DomainError("repeated edge " + std::to_string(u) + " " + std::to_string(v));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edges_;
    }

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    std::span<const std::size_t> neighbors(std::size_t u) const { return adj_[u]; }
    bool adjacent(std::size_t u, std::size_t v) const {
        return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
    }
    const std::string& name() const noexcept { return name_; }

    std::optional<std::size_t> regular_degree() const {
        const std::size_t k = adj_[0].size();
        for (const auto& a : adj_) {
            if (a.size() != k) return std::nullopt;
        }
        return k;
    }

    /// Breadth-first distances from `source`, -1 where unreachable. Stops
    /// after `max_depth` levels when one is given.
    std::vector<int> distances_from(std::size_t source, int max_depth = -1) const {
        std::vector<int> dist(adj_.size(), -1);
        std::vector<std::size_t> frontier{source};
        dist[source] = 0;
        for (int level = 1; !frontier.empty() && (max_depth < 0 || level <= max_depth); ++level) {
            std::vector<std::size_t> next;
            for (auto u : frontier) {
                for (auto w : adj_[u]) {
                    if (dist[w] < 0) {
                        dist[w] = level;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        return dist;
    }

    bool connected() const {
        const auto d = distances_from(0);
        return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
    }

    /// Hamming graph L_n(q): words of length n over q symbols, adjacent when
    /// they differ in one coordinate.
    static SmallGraph hamming(int n, int q) {
        if (n < 1 || q < 2) throw DomainError("hamming graph needs n >= 1, q >= 2");
        const Int v = checked_pow(q, n);
        SmallGraph g(static_cast<std::size_t>(v), "hamming(" + std::to_string(n) + "," + std::to_string(q) + ")");
        for (Int x = 0; x < v; ++x) {
            Int place = 1;
            for (int i = 0; i < n; ++i, place *= q) {
                const Int digit = (x / place) % q;
                for (Int d = digit + 1; d < q; ++d) {
                    g.add_edge(static_cast<std::size_t>(x), static_cast<std::size_t>(x + (d - digit) * place));
                }
            }
        }
        return g;
    }

    /// Johnson graph J_e^n: e-subsets of an n-set, adjacent when they share
    /// e-1 elements.
    static SmallGraph johnson(int n, int e) {
        if (n < 2 || n > 24 || e < 1 || e > n - 1) throw DomainError("johnson graph needs 1 <= e <= n-1");
        std::vector<std::uint32_t> sets;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            if (std::popcount(m) == e) sets.push_back(m);
        }
        SmallGraph g(sets.size(), "johnson(" + std::to_string(n) + "," + std::to_string(e) + ")");
        for (std::size_t a = 0; a < sets.size(); ++a) {
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                if (std::popcount(sets[a] & sets[b]) == e - 1) g.add_edge(a, b);
            }
        }
        return g;
    }

    static SmallGraph lattice(int q) {
        SmallGraph g = hamming(2, q);
        g.name_ = "lattice(" + std::to_string(q) + ")";
        return g;
    }

    static SmallGraph triangular(int n) {
        SmallGraph g = johnson(n, 2);
        g.name_ = "triangular(" + std::to_string(n) + ")";
        return g;
    }

    /// K^{(t)}_m: t parts of m vertices, edges between all vertices of
    /// different parts.
    static SmallGraph complete_multipartite(int parts, int part_size) {
        if (parts < 2 || part_size < 1) throw DomainError("multipartite graph needs t >= 2, m >= 1");
        const auto v = static_cast<std::size_t>(parts) * static_cast<std::size_t>(part_size);
        SmallGraph g(v, "multipartite(" + std::to_string(parts) + "," + std::to_string(part_size) + ")");
        for (std::size_t a = 0; a < v; ++a) {
            for (std::size_t b = a + 1; b < v; ++b) {
                if (a / part_size != b / part_size) g.add_edge(a, b);
            }
        }
        return g;
    }

    /// Cay(Sym_n, S) as an explicit graph; vertex i is the permutation of
    /// Lehmer rank i.
    static SmallGraph from_cayley(const GeneratorSet& gens, const SearchLimits& limits = {}) {
        if (gens.degree() > limits.max_whole_graph_degree) throw CapacityExceeded("Cayley graph too large");
        const auto v = static_cast<std::size_t>(factorial(gens.degree()));
        SmallGraph g(v, "cayley-" + std::string(short_name(gens.kind())) + "-" + std::to_string(gens.degree()));
        for (std::size_t i = 0; i < v; ++i) {
            const Permutation p = unrank(gens.degree(), i);
            for (std::size_t s = 0; s < gens.size(); ++s) {
                const auto j = static_cast<std::size_t>(rank(gens.neighbor(p, s)));
                if (i < j) g.add_edge(i, j);
            }
        }
        return g;
    }

    /// Edge list, one `u v` pair of 0-based vertex ids per line. Blank lines
    /// and lines starting with '#' are skipped. The vertex count is one more
    /// than the largest id.
    static SmallGraph parse_edge_list(std::istream& in, std::string name = "edge-list") {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::vector<std::size_t> lines;
        std::string line;
        std::size_t lineno = 0;
        std::size_t max_id = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream fields(line.substr(0, line.find('#')));
            long long u = -1;
            long long v = -1;
            std::string extra;
            if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
                throw ParseError("expected two non-negative vertex ids", lineno);
            }
            if (static_cast<std::size_t>(std::max(u, v)) >= kMaxSmallGraphVertices) {
                throw ParseError("vertex id exceeds the 50000-vertex limit", lineno);
            }
            edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            lines.push_back(lineno);
            max_id = std::max(max_id, static_cast<std::size_t>(std::max(u, v)));
        }
        if (edges.empty()) throw ParseError("edge list is empty");
        SmallGraph g(max_id + 1, std::move(name));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            try {
                g.add_edge(edges[i].first, edges[i].second);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), lines[i]);
            }
        }
        return g;
    }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
    std::string name_;
};

/// Parameters of an explicit graph by exhaustive computation over all vertex
/// pairs; no symmetry is assumed.
inline GraphReport small_graph_report(const SmallGraph& g, int r) {
    if (r < 1) throw DomainError("radius must be positive");
    if (!g.connected()) throw DomainError("graph is not connected");
    const std::size_t v = g.vertex_count();
    GraphReport rep;
    rep.generator_kind = g.name();
    rep.v = static_cast<Int>(v);
    if (auto k = g.regular_degree()) rep.k = static_cast<Int>(*k);
    rep.r = r;

    // best[rr][s]: max overlap of radius-rr balls at distance s.
    std::vector<std::vector<std::optional<Int>>> best(r + 1, std::vector<std::optional<Int>>(2 * r + 1));
    std::vector<std::vector<std::string>> witnesses(2 * r + 1);
    int diam = 0;
    for (std::size_t x = 0; x < v; ++x) {
        const auto dx = g.distances_from(x);
        diam = std::max(diam, *std::max_element(dx.begin(), dx.end()));
        for (std::size_t y = x + 1; y < v; ++y) {
            const int s = dx[y];
            if (s == 1 || s == 2) {
                Int common = 0;
                for (auto w : g.neighbors(y)) common += dx[w] == 1 ? 1 : 0;
                if (s == 1) rep.lambda = std::max(rep.lambda, common);
                if (s == 2) rep.mu = std::max(rep.mu, common);
            }
            if (s < 1 || s > 2 * r) continue;
            const auto dy = g.distances_from(y, r);
            for (int rr = 1; rr <= r; ++rr) {
                if (s > 2 * rr) continue;
                Int overlap = 0;
                for (std::size_t z = 0; z < v; ++z) {
                    overlap += (dx[z] >= 0 && dx[z] <= rr && dy[z] >= 0 && dy[z] <= rr) ? 1 : 0;
                }
                auto& slot = best[rr][s];
                if (rr == r) {
                    const std::string pair = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
                    if (!slot || overlap > *slot) witnesses[s] = {pair};
                    else if (overlap == *slot) witnesses[s].push_back(pair);
                }
                if (!slot || overlap > *slot) slot = overlap;
            }
        }
    }
    rep.diameter = diam;
    for (int s = 1; s <= 2 * r; ++s) {
        rep.n_s[s] = best[r][s];
        if (best[r][s]) rep.witnesses[s] = witnesses[s];
    }
    for (int rr = 1; rr <= r; ++rr) {
        Int value = 0;
        for (int s = 1; s <= 2 * rr; ++s) {
            if (best[rr][s]) value = std::max(value, *best[rr][s]);
        }
        rep.n_r[rr] = value;
    }
    return rep;
}

/// Distance-regularity by checking every ordered pair of vertices.
inline RegularityResult is_distance_regular(const SmallGraph& g) {
    if (!g.connected()) throw DomainError("graph is not connected");
    std::vector<std::optional<std::pair<Int, Int>>> params;
    std::vector<std::string> first;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        const auto dx = g.distances_from(x);
        for (std::size_t y = 0; y < g.vertex_count(); ++y) {
            Int c = 0;
            Int b = 0;
            for (auto w : g.neighbors(y)) {
                c += dx[w] == dx[y] - 1 ? 1 : 0;
                b += dx[w] == dx[y] + 1 ? 1 : 0;
            }
            if (auto w = detail::record_params(params, first, dx[y], c, b, std::to_string(x), std::to_string(y))) {
                return RegularityResult{false, {}, std::move(w)};
            }
        }
    }
    RegularityResult out{true, {}, std::nullopt};
    for (const auto& p : params) out.intersection_array.push_back(*p);
    return out;
}

/// Whether the graph has a cycle of each requested length (>= 3). Each cycle
/// is searched from its smallest vertex.
inline std::map<int, bool> cycle_length_check(const SmallGraph& g, const std::set<int>& lengths) {
    std::map<int, bool> out;
    for (int len : lengths) {
        if (len < 3) throw DomainError("cycle length must be at least 3");
        bool found = false;
        std::vector<std::size_t> path;
        std::vector<bool> on_path(g.vertex_count(), false);
        auto dfs = [&](auto&& self, std::size_t start) -> bool {
            const auto last = path.back();
            if (static_cast<int>(path.size()) == len) return g.adjacent(last, start);
            for (auto w : g.neighbors(last)) {
                if (w <= start || on_path[w]) continue;
                path.push_back(w);
                on_path[w] = true;
                const bool hit = self(self, start);
                on_path[w] = false;
                path.pop_back();
                if (hit) return true;
            }
            return false;
        };
        for (std::size_t s = 0; s < g.vertex_count() && !found; ++s) {
            path.assign(1, s);
            on_path[s] = true;
            found = dfs(dfs, s);
            on_path[s] = false;
        }
        out[len] = found;
    }
    return out;
}

} // namespace permrec
