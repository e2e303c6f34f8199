#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "permrec/ball.hpp"
#include "permrec/generators.hpp"

namespace permrec {

/// Persists balls around the identity as packed Lehmer ranks.
///
/// File layout, all integers little-endian:
///   magic "PRBC" | u16 version | u8 n | u8 generator kind | u16 radius |
///   u16 reserved | u64 member count | (radius+1) x u64 sphere sizes |
///   count x u64 ranks (sphere by sphere, in traversal order)
///
/// Only the three standard generator families are cached. A missing,
/// truncated or mismatching file is a cache miss.
class BallCache {
public:
    static constexpr std::array<char, 4> kMagic{'P', 'R', 'B', 'C'};
    static constexpr std::uint16_t kVersion = 1;

    explicit BallCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path path_for(const GeneratorSet& g, int radius) const {
        return dir_ / ("ball-" + std::string(long_name(g.kind())) + "-n" + std::to_string(g.degree()) + "-r" +
                       std::to_string(radius) + ".bin");
    }

    static bool cacheable(const GeneratorSet& g) { return g.kind() != GeneratorKind::Explicit; }

    std::optional<MetricBall> load(const GeneratorSet& g, int radius) const {
        if (!cacheable(g)) return std::nullopt;
        std::ifstream in(path_for(g, radius), std::ios::binary);
        if (!in) return std::nullopt;
        std::array<char, 4> magic{};
        in.read(magic.data(), 4);
        if (!in || magic != kMagic) return std::nullopt;
        if (read_uint(in, 2) != kVersion) return std::nullopt;
        const auto n = static_cast<int>(read_uint(in, 1));
        const auto kind = read_uint(in, 1);
        const auto r = static_cast<int>(read_uint(in, 2));
        read_uint(in, 2);
        const auto count = read_uint(in, 8);
        if (!in || n != g.degree() || kind != static_cast<std::uint64_t>(g.kind()) || r != radius) {
            return std::nullopt;
        }
        std::vector<std::size_t> offsets{0};
        for (int i = 0; i <= r; ++i) offsets.push_back(offsets.back() + read_uint(in, 8));
        if (!in || offsets.back() != count) return std::nullopt;
        std::vector<Permutation> members;
        members.reserve(count);
        const auto limit = static_cast<std::uint64_t>(factorial(n));
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto rk = read_uint(in, 8);
            if (!in || rk >= limit) return std::nullopt;
            members.push_back(unrank(n, rk));
        }
        if (members.empty() || !members.front().is_identity()) return std::nullopt;
        const Permutation center = members.front(); // copied before members is moved
        return MetricBall(center, r, GraphContext::of(g), std::move(members), std::move(offsets));
    }

    void store(const GeneratorSet& g, const MetricBall& b) const {
        if (!cacheable(g) || !b.center().is_identity()) return;
        std::filesystem::create_directories(dir_);
        const auto final_path = path_for(g, b.radius());
        auto tmp = final_path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(kMagic.data(), 4);
            write_uint(out, kVersion, 2);
            write_uint(out, static_cast<std::uint64_t>(g.degree()), 1);
            write_uint(out, static_cast<std::uint64_t>(g.kind()), 1);
            write_uint(out, static_cast<std::uint64_t>(b.radius()), 2);
            write_uint(out, 0, 2);
            write_uint(out, b.size(), 8);
            for (auto s : b.sphere_sizes()) write_uint(out, s, 8);
            for (const auto& m : b.members()) write_uint(out, rank(m), 8);
            if (!out) throw Error("failed to write ball cache " + tmp.string());
        }
        std::filesystem::rename(tmp, final_path);
    }

private:
    static std::uint64_t read_uint(std::istream& in, int bytes) {
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i) {
            const int c = in.get();
            if (c == std::char_traits<char>::eof()) return 0;
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
        }
        return v;
    }

    static void write_uint(std::ostream& out, std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
    }

    std::filesystem::path dir_;
};

} // namespace permrec
