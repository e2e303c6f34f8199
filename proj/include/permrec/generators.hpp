#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/errors.hpp"
#include "permrec/permutation.hpp"

namespace permrec {

enum class GeneratorKind : std::uint8_t {
    AllTranspositions = 0, // T:  every t_{i,j}
    Adjacent = 1,          // t:  bubble-sort swaps t_{i,i+1}
    Prefix = 2,            // st: star swaps t_{1,i}
    Explicit = 3,          // caller-supplied involutions
};

inline std::string_view short_name(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::AllTranspositions: return "T";
    case GeneratorKind::Adjacent: return "t";
    case GeneratorKind::Prefix: return "st";
    case GeneratorKind::Explicit: return "explicit";
    }
    return "?";
}

inline std::string_view long_name(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::AllTranspositions: return "transposition";
    case GeneratorKind::Adjacent: return "bubble-sort";
    case GeneratorKind::Prefix: return "star";
    case GeneratorKind::Explicit: return "explicit";
    }
    return "?";
}

/// Accepts `T`, `t`, `st` and the long names.
inline GeneratorKind parse_generator_kind(std::string_view s) {
    if (s == "T" || s == "transposition" || s == "all") return GeneratorKind::AllTranspositions;
    if (s == "t" || s == "bubble-sort" || s == "bubble" || s == "adjacent") return GeneratorKind::Adjacent;
    if (s == "st" || s == "star" || s == "prefix") return GeneratorKind::Prefix;
    throw ParseError("unknown generator set '" + std::string(s) + "' (expected T, t or st)");
}

/// Generator set S of a Cayley graph Cay(Sym_n, S). Every element is an
/// involution other than the identity, so S = S^{-1} holds by construction.
class GeneratorSet {
public:
    static GeneratorSet all_transpositions(int n) {
        GeneratorSet g(GeneratorKind::AllTranspositions, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) g.add_swap(i, j);
        }
        return g;
    }

    static GeneratorSet adjacent(int n) {
        GeneratorSet g(GeneratorKind::Adjacent, n);
        for (int i = 0; i + 1 < n; ++i) g.add_swap(i, i + 1);
        return g;
    }

    static GeneratorSet prefix(int n) {
        GeneratorSet g(GeneratorKind::Prefix, n);
        for (int i = 1; i < n; ++i) g.add_swap(0, i);
        return g;
    }

    static GeneratorSet make(GeneratorKind kind, int n) {
        switch (kind) {
        case GeneratorKind::AllTranspositions: return all_transpositions(n);
        case GeneratorKind::Adjacent: return adjacent(n);
        case GeneratorKind::Prefix: return prefix(n);
        case GeneratorKind::Explicit: break;
        }
        throw DomainError("explicit generator sets need their elements");
    }

    /// Throws DomainError for non-involutions, the identity, duplicates, or a
    /// degree mismatch.
    static GeneratorSet explicit_set(int n, std::span<const Permutation> elements) {
        GeneratorSet g(GeneratorKind::Explicit, n);
        if (elements.empty()) throw DomainError("empty generator set");
        for (const auto& s : elements) {
            if (s.degree() != n) throw DegreeMismatch(s.degree(), n);
            if (s.is_identity()) throw DomainError("the identity cannot be a generator");
            if (!s.is_involution()) throw DomainError("generator " + to_string(s) + " is not an involution");
            for (const auto& t : g.elements_) {
                if (t == s) throw DomainError("duplicate generator " + to_string(s));
            }
            g.elements_.push_back(s);
            g.swaps_.push_back(as_swap(s));
        }
        return g;
    }

    GeneratorKind kind() const noexcept { return kind_; }
    int degree() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const Permutation> elements() const noexcept { return elements_; }
    const Permutation& operator[](std::size_t i) const noexcept { return elements_[i]; }

    /// g * s_i
    Permutation neighbor(const Permutation& g, std::size_t i) const {
        if (swaps_[i]) return g.swapped(swaps_[i]->first, swaps_[i]->second);
        return compose(g, elements_[i]);
    }

    /// Whether s S s^{-1} = S for every s in Sym_n. True for the full
    /// transposition set; for the others it is decided by checking
    /// conjugation by the transpositions t_{1,i}, which generate Sym_n.
    bool is_conjugation_closed() const {
        if (kind_ == GeneratorKind::AllTranspositions) return true;
        for (int i = 1; i < n_; ++i) {
            const Permutation c = Permutation::transposition(n_, 1, i + 1);
            for (const auto& s : elements_) {
                const Permutation conj = compose(compose(c, s), c);
                bool found = false;
                for (const auto& t : elements_) found = found || t == conj;
                if (!found) return false;
            }
        }
        return true;
    }

    /// Identifies the graph for context checks: kind, degree and elements.
    std::uint64_t fingerprint() const noexcept {
        std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(kind_) << 8) ^ n_;
        for (const auto& s : elements_) h = (h ^ s.packed()) * 1099511628211ull;
        return h;
    }

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.elements_ == b.elements_;
    }

private:
    GeneratorSet(GeneratorKind kind, int n) : kind_(kind), n_(n) {
        if (n < 2 || n > kMaxDegree) throw DomainError("generator set degree must be in 2.." + std::to_string(kMaxDegree));
    }

    void add_swap(int i, int j) {
        elements_.push_back(Permutation::transposition(n_, i + 1, j + 1));
        swaps_.emplace_back(std::pair{i, j});
    }

    static std::optional<std::pair<int, int>> as_swap(const Permutation& s) {
        int first = -1;
        int second = -1;
        for (int k = 0; k < s.degree(); ++k) {
            if (s.image0(k) == k) continue;
            if (first < 0) {
                first = k;
            } else if (second < 0) {
                second = k;
            } else {
                return std::nullopt;
            }
        }
        return std::pair{first, second};
    }

    GeneratorKind kind_;
    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::optional<std::pair<int, int>>> swaps_;
};

} // namespace permrec
