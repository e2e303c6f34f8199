#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permrec/cycle_type.hpp"

using namespace permrec;

namespace {

std::vector<int> lengths_of(const CycleType& ct) {
    std::vector<int> out;
    for (int j = 1; j <= ct.degree(); ++j) {
        for (int c = 0; c < ct.count(j); ++c) out.push_back(j);
    }
    return out;
}

Permutation from_oracle(const oracle::Perm& p) {
    std::vector<int> one(p.begin(), p.end());
    for (int& v : one) ++v;
    return Permutation::from_one_line(one);
}

} // namespace

TEST(CycleType, FormatsAndParses) {
    const auto ct = cycle_type(Permutation::from_one_line({2, 1, 3, 4}));
    EXPECT_EQ(to_string(ct), "1^2 2^1");
    EXPECT_EQ(parse_cycle_type("1^2 2^1"), ct);
    EXPECT_EQ(parse_cycle_type("2^1 1^2 3^0"), ct);
    EXPECT_THROW(parse_cycle_type("2^1 2^1"), ParseError);
    EXPECT_THROW(parse_cycle_type("2"), ParseError);
    EXPECT_THROW(parse_cycle_type(""), ParseError);
}

TEST(CycleType, SymFourClassSizes) {
    EXPECT_EQ(conjugacy_class_size(parse_cycle_type("1^1 3^1")), 8);
    EXPECT_EQ(conjugacy_class_size(parse_cycle_type("1^2 2^1")), 6);
    EXPECT_EQ(conjugacy_class_size(parse_cycle_type("4^1")), 6);
    EXPECT_EQ(conjugacy_class_size(parse_cycle_type("2^2")), 3);
    EXPECT_EQ(conjugacy_class_size(parse_cycle_type("1^4")), 1);
}

TEST(CycleType, ClassSizesMatchOracleCounts) {
    for (int n = 1; n <= 7; ++n) {
        const auto counts = oracle::class_sizes(n);
        const auto types = all_cycle_types(n);
        EXPECT_EQ(types.size(), counts.size());
        for (const auto& ct : types) EXPECT_EQ(conjugacy_class_size(ct), counts.at(lengths_of(ct))) << to_string(ct);
    }
}

TEST(CycleType, EnumerationIsExactlyTheClass) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            const auto members = enumerate_class(ct);
            std::set<Permutation> unique(members.begin(), members.end());
            EXPECT_EQ(unique.size(), members.size());
            EXPECT_EQ(static_cast<Int>(members.size()), conjugacy_class_size(ct));
            for (const auto& p : members) EXPECT_EQ(cycle_type(p), ct);
            EXPECT_EQ(cycle_type(class_representative(ct)), ct);
        }
    }
    EXPECT_THROW(enumerate_class(parse_cycle_type("11^1")), CapacityExceeded);
}

TEST(CycleType, OrderedBySphereIndex) {
    const auto types = all_cycle_types(5);
    for (std::size_t i = 1; i < types.size(); ++i) EXPECT_LE(types[i - 1].sphere_index(), types[i].sphere_index());
    EXPECT_EQ(to_string(types.front()), "1^5");
    EXPECT_EQ(to_string(types.back()), "5^1");
}

TEST(Factorizations, KnownSmallCounts) {
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("3^1")).count, 3);
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("4^1")).count, 16);
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("2^2")).count, 2);
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("2^1 3^1")).count, 9);
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("5^1")).count, 125);
    EXPECT_EQ(denes_factorization_count(parse_cycle_type("1^1 4^1")).count, 16);
    const auto id = denes_factorization_count(parse_cycle_type("1^4"));
    EXPECT_EQ(id.count, 1);
    EXPECT_TRUE(id.degenerate);
}

TEST(Factorizations, MatchOracleEnumerationUpToDegreeFive) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& ct : all_cycle_types(n)) {
            if (ct.sphere_index() == 0) continue;
            const auto rep = class_representative(ct);
            oracle::Perm p;
            for (int v : rep.one_line()) p.push_back(v - 1);
            EXPECT_EQ(denes_factorization_count(ct).count, oracle::factorizations(p, ct.sphere_index()))
                << to_string(ct);
        }
    }
}

TEST(Factorizations, CayleyTreeCountForFullCycles) {
    for (int n = 2; n <= 12; ++n) {
        std::vector<int> counts(n, 0);
        counts[n - 1] = 1;
        EXPECT_EQ(denes_factorization_count(CycleType(counts)).count, checked_pow(n, n - 2));
    }
}

TEST(CycleType, ConjugationInvariance) {
    for (const auto& p : oracle::all_perms(5)) {
        for (const auto& s : oracle::all_perms(5)) {
            if (s[0] != 1 && s[0] != 0) continue; // a subset keeps this fast
            const auto pp = from_oracle(p);
            const auto ss = from_oracle(s);
            EXPECT_EQ(cycle_type(ss * pp * ss.inverse()), cycle_type(pp));
        }
    }
}
