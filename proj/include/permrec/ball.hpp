#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permrec/errors.hpp"
#include "permrec/generators.hpp"
#include "permrec/limits.hpp"
#include "permrec/permutation.hpp"
#include "permrec/visited.hpp"

namespace permrec {

/// Identifies which Cayley graph a ball was computed in.
struct GraphContext {
    GeneratorKind kind;
    int degree;
    std::uint64_t fingerprint;

    static GraphContext of(const GeneratorSet& g) { return {g.kind(), g.degree(), g.fingerprint()}; }

    friend bool operator==(const GraphContext&, const GraphContext&) = default;
};

/// B_r(center) with its sphere decomposition. Members are stored sphere by
/// sphere; `sphere(i)` is S_i(center).
class MetricBall {
public:
    MetricBall(Permutation center, int radius, GraphContext context, std::vector<Permutation> members,
               std::vector<std::size_t> sphere_offsets)
        : center_(center), radius_(radius), context_(context), members_(std::move(members)),
          offsets_(std::move(sphere_offsets)) {
        if (offsets_.size() != static_cast<std::size_t>(radius_) + 2 || offsets_.front() != 0 ||
            offsets_.back() != members_.size()) {
            throw DomainError("inconsistent sphere offsets");
        }
        index_.reserve(members_.size());
        for (const auto& m : members_) index_.insert(m.packed());
    }

    const Permutation& center() const noexcept { return center_; }
    int radius() const noexcept { return radius_; }
    const GraphContext& context() const noexcept { return context_; }
    std::span<const Permutation> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    bool contains(const Permutation& p) const {
        return p.degree() == context_.degree && index_.contains(p.packed());
    }

    /// S_i(center) for 0 <= i <= radius.
    std::span<const Permutation> sphere(int i) const {
        if (i < 0 || i > radius_) throw DomainError("sphere index out of range");
        return std::span<const Permutation>(members_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }

    std::vector<std::size_t> sphere_sizes() const {
        std::vector<std::size_t> out;
        for (int i = 0; i <= radius_; ++i) out.push_back(offsets_[i + 1] - offsets_[i]);
        return out;
    }

    /// x * B_r(c) = B_r(x c); left multiplication is a graph automorphism.
    MetricBall translated(const Permutation& x) const {
        std::vector<Permutation> moved;
        moved.reserve(members_.size());
        for (const auto& m : members_) moved.push_back(compose(x, m));
        return MetricBall(compose(x, center_), radius_, context_, std::move(moved), offsets_);
    }

private:
    Permutation center_;
    int radius_;
    GraphContext context_;
    std::vector<Permutation> members_;
    std::vector<std::size_t> offsets_;
    std::unordered_set<std::uint64_t> index_;
};

/// B_r(center) by breadth-first expansion through right multiplication by
/// generators. Throws CapacityExceeded when the ball outgrows the budget.
inline MetricBall ball(const Permutation& center, int r, const GeneratorSet& g, const SearchLimits& limits = {}) {
    if (r < 0) throw DomainError("negative radius");
    if (center.degree() != g.degree()) throw DegreeMismatch(center.degree(), g.degree());
    VisitedSet seen(g.degree(), limits);
    std::vector<Permutation> members{center};
    std::vector<std::size_t> offsets{0, 1};
    seen.insert(center);
    for (int level = 1; level <= r; ++level) {
        const std::size_t begin = offsets[level - 1];
        const std::size_t end = offsets[level];
        for (std::size_t idx = begin; idx < end; ++idx) {
            for (std::size_t s = 0; s < g.size(); ++s) {
                Permutation next = g.neighbor(members[idx], s);
                if (seen.insert(next)) {
                    members.push_back(next);
                    if (members.size() > limits.max_ball_size) {
                        throw CapacityExceeded("ball of radius " + std::to_string(r) + " exceeds " +
                                               std::to_string(limits.max_ball_size) + " vertices");
                    }
                }
            }
        }
        offsets.push_back(members.size());
    }
    return MetricBall(center, r, GraphContext::of(g), std::move(members), std::move(offsets));
}

/// |B1 ∩ B2|.
inline std::size_t intersection_size(const MetricBall& a, const MetricBall& b) {
    if (!(a.context() == b.context())) throw DomainError("balls belong to different graphs");
    const MetricBall& small = a.size() <= b.size() ? a : b;
    const MetricBall& large = a.size() <= b.size() ? b : a;
    std::size_t count = 0;
    for (const auto& m : small.members()) count += large.contains(m) ? 1 : 0;
    return count;
}

/// Distances from the identity to every vertex of Cay(Sym_n, S), indexed by
/// Lehmer rank. By vertex-transitivity d(x, y) = d(e, x^{-1} y).
class DistanceTable {
public:
    explicit DistanceTable(const GeneratorSet& g, const SearchLimits& limits = {}) : n_(g.degree()) {
        if (n_ > limits.max_whole_graph_degree) {
            throw CapacityExceeded("whole-graph traversal limited to degree " +
                                   std::to_string(limits.max_whole_graph_degree));
        }
        const auto v = static_cast<std::size_t>(factorial(n_));
        dist_.assign(v, kUnseen);
        const Permutation e = Permutation::identity(n_);
        dist_[rank(e)] = 0;
        spheres_.push_back({e});
        std::size_t reached = 1;
        while (true) {
            std::vector<Permutation> next;
            const auto level = static_cast<std::uint8_t>(spheres_.size());
            for (const auto& x : spheres_.back()) {
                for (std::size_t s = 0; s < g.size(); ++s) {
                    const Permutation y = g.neighbor(x, s);
                    auto& d = dist_[rank(y)];
                    if (d == kUnseen) {
                        d = level;
                        next.push_back(y);
                    }
                }
            }
            if (next.empty()) break;
            reached += next.size();
            spheres_.push_back(std::move(next));
        }
        connected_ = reached == v;
    }

    int degree() const noexcept { return n_; }
    bool connected() const noexcept { return connected_; }

    /// -1 for vertices not reachable from the identity.
    int distance_from_identity(const Permutation& p) const {
        const auto d = dist_[rank(p)];
        return d == kUnseen ? -1 : d;
    }

    int distance(const Permutation& x, const Permutation& y) const {
        return distance_from_identity(left_quotient(x, y));
    }

    /// Eccentricity of the identity, which is the diameter.
    int eccentricity() const noexcept { return static_cast<int>(spheres_.size()) - 1; }

    const std::vector<Permutation>& sphere(int i) const { return spheres_.at(static_cast<std::size_t>(i)); }

    std::vector<std::size_t> sphere_sizes() const {
        std::vector<std::size_t> out;
        for (const auto& s : spheres_) out.push_back(s.size());
        return out;
    }

private:
    static constexpr std::uint8_t kUnseen = 0xFF;

    int n_;
    bool connected_ = false;
    std::vector<std::uint8_t> dist_;
    std::vector<std::vector<Permutation>> spheres_;
};

} // namespace permrec
