#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/errors.hpp"
#include "permrec/permutation.hpp"

namespace permrec {

/// Largest degree for which whole conjugacy classes are materialized.
inline constexpr int kMaxClassEnumerationDegree = 10;

/// Cycle type 1^{h_1} 2^{h_2} ... n^{h_n}: h_j counts the cycles of length j,
/// fixed points included. It indexes the conjugacy classes of Sym_n.
class CycleType {
public:
    /// `counts[j-1]` is h_j. Trailing entries may be omitted; the degree is
    /// sum_j j*h_j.
    explicit CycleType(std::vector<int> counts) {
        int n = 0;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] < 0) throw DomainError("negative cycle count");
            n += static_cast<int>(j + 1) * counts[j];
        }
        if (n < 1 || n > kMaxDegree) throw DomainError("cycle type degree " + std::to_string(n) + " out of range");
        counts.resize(n, 0);
        counts_ = std::move(counts);
    }

    static CycleType of(const Permutation& p) {
        const int n = p.degree();
        std::vector<int> counts(n, 0);
        std::uint32_t seen = 0;
        for (int i = 0; i < n; ++i) {
            if (seen & (1u << i)) continue;
            int len = 0;
            for (int j = i; !(seen & (1u << j)); j = p.image0(j)) {
                seen |= 1u << j;
                ++len;
            }
            ++counts[len - 1];
        }
        return CycleType(std::move(counts));
    }

    int degree() const noexcept { return static_cast<int>(counts_.size()); }

    /// h_j for a cycle length j >= 1 (zero beyond the degree).
    int count(int length) const noexcept {
        return length >= 1 && length <= degree() ? counts_[length - 1] : 0;
    }

    std::span<const int> counts() const noexcept { return counts_; }

    int cycle_count() const noexcept {
        int c = 0;
        for (int h : counts_) c += h;
        return c;
    }

    /// Minimal number of transpositions whose product has this type; equals
    /// the sphere index in the all-transpositions graph.
    int sphere_index() const noexcept { return degree() - cycle_count(); }

    /// sum_j j^2 h_j
    Int sum_of_squares() const noexcept {
        Int s = 0;
        for (int j = 1; j <= degree(); ++j) s += static_cast<Int>(j) * j * counts_[j - 1];
        return s;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::vector<int> counts_;
};

inline CycleType cycle_type(const Permutation& p) { return CycleType::of(p); }

/// `1^2 2^1` style text, ascending cycle length, zero counts omitted.
inline std::string to_string(const CycleType& ct) {
    std::string s;
    for (int j = 1; j <= ct.degree(); ++j) {
        if (ct.count(j) == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(j) + '^' + std::to_string(ct.count(j));
    }
    return s;
}

/// Parses `1^2 2^1`. Tokens may appear in any order; zero exponents are
/// accepted, repeated lengths are not.
inline CycleType parse_cycle_type(std::string_view text) {
    std::vector<int> counts;
    std::vector<bool> given;
    std::size_t pos = 0;
    auto read_int = [&](int& out) {
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), out);
        if (ec != std::errc{}) throw ParseError("expected an integer at offset " + std::to_string(pos));
        pos = static_cast<std::size_t>(ptr - text.data());
    };
    bool any = false;
    while (true) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        int length = 0;
        int h = 0;
        read_int(length);
        if (pos >= text.size() || text[pos] != '^') throw ParseError("expected '^' at offset " + std::to_string(pos));
        ++pos;
        read_int(h);
        if (length < 1 || length > kMaxDegree) throw ParseError("cycle length out of range");
        if (h < 0) throw ParseError("negative exponent");
        if (static_cast<int>(counts.size()) < length) {
            counts.resize(length, 0);
            given.resize(length, false);
        }
        if (given[length - 1]) throw ParseError("cycle length " + std::to_string(length) + " given twice");
        given[length - 1] = true;
        counts[length - 1] = h;
        any = true;
    }
    if (!any) throw ParseError("empty cycle type");
    try {
        return CycleType(std::move(counts));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

/// Every cycle type of degree n, ordered by sphere index and, within one
/// sphere, by descending longest cycle (e.g. 4^1 before 2^1 3^1 before 2^3).
inline std::vector<CycleType> all_cycle_types(int n) {
    if (n < 1 || n > kMaxDegree) throw DomainError("degree out of range");
    std::vector<std::vector<int>> partitions;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            partitions.push_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    std::vector<CycleType> out;
    out.reserve(partitions.size());
    for (const auto& part : partitions) {
        std::vector<int> counts(n, 0);
        for (int p : part) ++counts[p - 1];
        out.emplace_back(std::move(counts));
    }
    std::stable_sort(out.begin(), out.end(), [](const CycleType& a, const CycleType& b) {
        return a.sphere_index() < b.sphere_index();
    });
    return out;
}

/// Size of the conjugacy class n! / prod_j (j^{h_j} h_j!), exact.
inline Int conjugacy_class_size(const CycleType& ct) {
    Int denom = 1;
    for (int j = 1; j <= ct.degree(); ++j) {
        denom = checked_mul(denom, checked_pow(j, ct.count(j)));
        denom = checked_mul(denom, factorial(ct.count(j)));
    }
    const Int num = factorial(ct.degree());
    if (num % denom != 0) throw DomainError("class size is not integral");
    return num / denom;
}

/// Canonical member: the longest cycles occupy the smallest symbols, each
/// cycle written as (a a+1 ... b).
inline Permutation class_representative(const CycleType& ct) {
    const int n = ct.degree();
    std::vector<int> images(n);
    int next = 0;
    for (int len = n; len >= 1; --len) {
        for (int c = 0; c < ct.count(len); ++c) {
            for (int k = 0; k < len; ++k) images[next + k] = next + (k + 1) % len + 1;
            next += len;
        }
    }
    return Permutation::from_one_line(images);
}

/// All members of the class, in a deterministic order.
inline std::vector<Permutation> enumerate_class(const CycleType& ct) {
    const int n = ct.degree();
    if (n > kMaxClassEnumerationDegree) {
        throw CapacityExceeded("class enumeration is limited to degree " +
                               std::to_string(kMaxClassEnumerationDegree));
    }
    std::vector<int> remaining(ct.counts().begin(), ct.counts().end());
    std::vector<int> images(n, 0);
    std::vector<bool> used(n, false);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(conjugacy_class_size(ct)));

    // Each cycle is opened at the smallest unused symbol, so every
    // permutation is produced exactly once.
    std::vector<int> cycle;
    auto fill_cycle = [&](auto&& self, int len, auto&& next_cycle) -> void {
        if (static_cast<int>(cycle.size()) == len) {
            for (int k = 0; k < len; ++k) images[cycle[k]] = cycle[(k + 1) % len] + 1;
            next_cycle();
            return;
        }
        for (int s = 0; s < n; ++s) {
            if (used[s]) continue;
            used[s] = true;
            cycle.push_back(s);
            self(self, len, next_cycle);
            cycle.pop_back();
            used[s] = false;
        }
    };
    auto place = [&](auto&& self) -> void {
        int first = 0;
        while (first < n && used[first]) ++first;
        if (first == n) {
            out.push_back(Permutation::from_one_line(images));
            return;
        }
        for (int len = 1; len <= n; ++len) {
            if (remaining[len - 1] == 0) continue;
            --remaining[len - 1];
            used[first] = true;
            cycle.assign(1, first);
            auto cont = [&] {
                const std::vector<int> saved = cycle;
                self(self);
                cycle = saved;
            };
            fill_cycle(fill_cycle, len, cont);
            cycle.clear();
            used[first] = false;
            ++remaining[len - 1];
        }
    };
    place(place);
    return out;
}

/// Number of ordered factorizations of a permutation of the given type into
/// the minimal number i = n - (number of cycles) of transpositions:
///   i! * prod_j (j^{j-2} / (j-1)!)^{h_j}
/// evaluated as a multinomial coefficient times prod_j j^{(j-2) h_j}.
struct FactorizationCount {
    Int count;
    /// Set for the identity type (i = 0), where the count 1 is a convention.
    bool degenerate;
};

inline FactorizationCount denes_factorization_count(const CycleType& ct) {
    const int i = ct.sphere_index();
    if (i == 0) return {1, true};
    Int count = factorial(i);
    for (int j = 2; j <= ct.degree(); ++j) {
        for (int c = 0; c < ct.count(j); ++c) {
            count /= factorial(j - 1); // exact: multinomial over the (j-1)-blocks
        }
    }
    for (int j = 3; j <= ct.degree(); ++j) {
        count = checked_mul(count, checked_pow(checked_pow(j, j - 2), ct.count(j)));
    }
    return {count, false};
}

} // namespace permrec
