#pragma once

#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permrec/arith.hpp"
#include "permrec/errors.hpp"

namespace permrec {

/// Largest supported degree. One-line images are packed 4 bits per position
/// into a single 64-bit word, which caps n at 16.
inline constexpr int kMaxDegree = 16;

/// Element of Sym_n in one-line notation.
///
/// Storage is 0-based; everything that crosses the API boundary as text or as
/// a `std::vector<int>` is 1-based, so `[2,3,1]` maps 1->2, 2->3, 3->1.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        check_degree(n);
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) p.map_[i] = static_cast<std::uint8_t>(i);
        return p;
    }

    /// Builds from 1-based images. Throws DomainError unless every symbol 1..n
    /// occurs exactly once.
    static Permutation from_one_line(std::span<const int> images) {
        const int n = static_cast<int>(images.size());
        check_degree(n);
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(n);
        std::uint32_t seen = 0;
        for (int i = 0; i < n; ++i) {
            const int v = images[i];
            if (v < 1 || v > n) {
                throw DomainError("symbol " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            }
            if (seen & (1u << (v - 1))) throw DomainError("symbol " + std::to_string(v) + " repeated");
            seen |= 1u << (v - 1);
            p.map_[i] = static_cast<std::uint8_t>(v - 1);
        }
        return p;
    }

    static Permutation from_one_line(std::initializer_list<int> images) {
        return from_one_line(std::span<const int>(images.begin(), images.size()));
    }

    /// The transposition t_{i,j} (1-based positions).
    static Permutation transposition(int n, int i, int j) {
        if (i < 1 || j < 1 || i > n || j > n || i == j) {
            throw DomainError("invalid transposition positions");
        }
        Permutation p = identity(n);
        std::swap(p.map_[i - 1], p.map_[j - 1]);
        return p;
    }

    static Permutation from_packed(int n, std::uint64_t code) {
        check_degree(n);
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) p.map_[i] = static_cast<std::uint8_t>((code >> (4 * i)) & 0xF);
        return p;
    }

    int degree() const noexcept { return n_; }

    /// 1-based image of the 1-based symbol k.
    int operator()(int k) const noexcept { return map_[k - 1] + 1; }

    /// 0-based image of the 0-based position k.
    int image0(int k) const noexcept { return map_[k]; }

    std::vector<int> one_line() const {
        std::vector<int> out(n_);
        for (int i = 0; i < n_; ++i) out[i] = map_[i] + 1;
        return out;
    }

    Permutation inverse() const noexcept {
        Permutation q;
        q.n_ = n_;
        for (int i = 0; i < n_; ++i) q.map_[map_[i]] = static_cast<std::uint8_t>(i);
        return q;
    }

    bool is_identity() const noexcept {
        for (int i = 0; i < n_; ++i) {
            if (map_[i] != i) return false;
        }
        return true;
    }

    bool is_involution() const noexcept {
        for (int i = 0; i < n_; ++i) {
            if (map_[map_[i]] != i) return false;
        }
        return true;
    }

    /// Number of disjoint cycles, fixed points included.
    int cycle_count() const noexcept {
        std::uint32_t seen = 0;
        int cycles = 0;
        for (int i = 0; i < n_; ++i) {
            if (seen & (1u << i)) continue;
            ++cycles;
            for (int j = i; !(seen & (1u << j)); j = map_[j]) seen |= 1u << j;
        }
        return cycles;
    }

    int parity() const noexcept { return (n_ - cycle_count()) % 2; }

    /// Returns this permutation with positions i and j exchanged (0-based),
    /// i.e. right multiplication by t_{i+1,j+1}.
    Permutation swapped(int i, int j) const noexcept {
        Permutation q = *this;
        std::swap(q.map_[i], q.map_[j]);
        return q;
    }

    /// One-line images packed 4 bits per position. Unique among permutations
    /// of the same degree.
    std::uint64_t packed() const noexcept {
        std::uint64_t code = 0;
        for (int i = 0; i < n_; ++i) code |= static_cast<std::uint64_t>(map_[i]) << (4 * i);
        return code;
    }

    friend Permutation compose(const Permutation& p, const Permutation& q);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static void check_degree(int n) {
        if (n < 1 || n > kMaxDegree) {
            throw DomainError("degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
        }
    }

    // Compared before n_ by the defaulted <=>; only same-degree comparisons matter.
    std::array<std::uint8_t, kMaxDegree> map_{};
    std::uint8_t n_ = 0;
};

/// Product p*q acting on symbols as k -> p(q(k)). Right multiplication by the
/// transposition t_{i,j} therefore swaps the entries in positions i and j.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
    Permutation r;
    r.n_ = p.n_;
    for (int k = 0; k < p.n_; ++k) r.map_[k] = p.map_[q.map_[k]];
    return r;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// x^{-1} y, the element that labels the path from x to y in any Cayley graph.
inline Permutation left_quotient(const Permutation& x, const Permutation& y) {
    return compose(x.inverse(), y);
}

/// Swap of positions i < j, 1-based.
struct Transposition {
    int i;
    int j;

    Permutation to_permutation(int n) const { return Permutation::transposition(n, i, j); }

    friend bool operator==(const Transposition&, const Transposition&) = default;
};

inline Permutation operator*(const Permutation& p, const Transposition& t) {
    if (t.i < 1 || t.j > p.degree() || t.i >= t.j) throw DomainError("invalid transposition positions");
    return p.swapped(t.i - 1, t.j - 1);
}

/// Distance in the all-transpositions Cayley graph: n minus the number of
/// cycles of p^{-1} q.
inline int min_transposition_distance(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
    return p.degree() - left_quotient(p, q).cycle_count();
}

// Lehmer-code ranking: rank(identity) = 0, rank(reverse) = n! - 1.

inline std::uint64_t rank(const Permutation& p) {
    const int n = p.degree();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (p.image0(j) < p.image0(i)) ++smaller;
        }
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

inline Permutation unrank(int n, std::uint64_t r) {
    if (n < 1 || n > kMaxDegree) throw DomainError("degree out of range");
    if (r >= static_cast<std::uint64_t>(factorial(n))) {
        throw DomainError("rank " + std::to_string(r) + " out of range for degree " + std::to_string(n));
    }
    std::array<int, kMaxDegree> digits{};
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[i] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) {
        images[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return Permutation::from_one_line(images);
}

inline std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(p(i));
    }
    s += ']';
    return s;
}

/// Parses `[2,3,1]`. Whitespace around symbols is tolerated.
inline Permutation parse_permutation(std::string_view text) {
    auto skip_ws = [&](std::size_t& pos) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    std::size_t pos = 0;
    skip_ws(pos);
    if (pos >= text.size() || text[pos] != '[') throw ParseError("permutation must start with '['");
    ++pos;
    std::vector<int> images;
    skip_ws(pos);
    if (pos < text.size() && text[pos] == ']') throw ParseError("empty permutation");
    while (true) {
        skip_ws(pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError("expected a symbol at offset " + std::to_string(pos));
        pos = static_cast<std::size_t>(ptr - text.data());
        images.push_back(value);
        skip_ws(pos);
        if (pos >= text.size()) throw ParseError("unterminated permutation");
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (text[pos] != ',') throw ParseError("expected ',' or ']' at offset " + std::to_string(pos));
        ++pos;
    }
    skip_ws(pos);
    if (pos != text.size()) throw ParseError("trailing characters after permutation");
    if (images.size() > static_cast<std::size_t>(kMaxDegree)) throw ParseError("degree exceeds 16");
    try {
        return Permutation::from_one_line(images);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace permrec

template <>
struct std::hash<permrec::Permutation> {
    std::size_t operator()(const permrec::Permutation& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.packed());
    }
};
