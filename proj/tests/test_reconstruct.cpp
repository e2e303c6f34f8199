#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permrec/reconstruct.hpp"

using namespace permrec;

namespace {

const GeneratorKind kKinds[] = {GeneratorKind::AllTranspositions, GeneratorKind::Adjacent, GeneratorKind::Prefix};

// Reference decoder: every vertex whose radius-r ball holds all patterns.
std::vector<Permutation> brute_candidates(const std::vector<Permutation>& patterns, int r, const DistanceTable& t) {
    std::vector<Permutation> out;
    const int n = patterns.front().degree();
    for (int i = 0; i <= t.eccentricity(); ++i) {
        for (const auto& c : t.sphere(i)) {
            bool all = true;
            for (const auto& p : patterns) all = all && t.distance(c, p) <= r;
            if (all) out.push_back(c);
        }
    }
    (void)n;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Channel, DistortStaysInsideTheBallAndIsSeeded) {
    for (auto kind : kKinds) {
        const auto g = GeneratorSet::make(kind, 5);
        const DistanceTable table(g);
        const auto x = Permutation::from_one_line({3, 1, 4, 2, 5});
        for (auto policy : {ErrorCountPolicy::UniformUpToR, ErrorCountPolicy::ExactlyR}) {
            ChannelSpec spec{g, 2, 42, Distinctness::AllowRepeats, policy};
            for (std::uint64_t i = 0; i < 200; ++i) {
                const auto y = distort(x, spec, i);
                EXPECT_LE(table.distance(x, y), 2);
                EXPECT_EQ(y, distort(x, spec, i));
            }
        }
    }
}

TEST(Channel, DistinctPatternsAndCapacity) {
    const auto g = GeneratorSet::all_transpositions(4);
    const auto x = Permutation::from_one_line({3, 1, 4, 2});
    ChannelSpec spec{g, 1, 5, Distinctness::RequireDistinct, ErrorCountPolicy::UniformUpToR};
    const auto pats = generate_patterns(x, spec, 7, {});
    EXPECT_EQ(std::set<Permutation>(pats.begin(), pats.end()).size(), 7u); // the whole ball B_1(x)
    EXPECT_THROW(generate_patterns(x, spec, 8, {}), DomainError);
    EXPECT_EQ(pats, generate_patterns(x, spec, 7, {}));
}

TEST(Reconstruct, FourNeighboursOfAPermutationDetermineIt) {
    const auto g = GeneratorSet::all_transpositions(4);
    const auto x = Permutation::from_one_line({3, 1, 4, 2});
    ChannelSpec spec{g, 1, 9, Distinctness::RequireDistinct, ErrorCountPolicy::ExactlyR};
    const auto pats = generate_patterns(x, spec, 4, {});
    const auto res = reconstruct(pats, 1, g);
    EXPECT_EQ(res.status, ReconstructionStatus::Unique);
    ASSERT_EQ(res.candidates.size(), 1u);
    EXPECT_EQ(res.candidates.front(), x);
}

TEST(Reconstruct, TrivialAmbiguousAndInconsistentCases) {
    const auto g = GeneratorSet::all_transpositions(4);
    const auto x = Permutation::from_one_line({3, 1, 4, 2});
    const std::vector<Permutation> single{x};
    const auto amb = reconstruct(single, 1, g);
    EXPECT_EQ(amb.status, ReconstructionStatus::Ambiguous);
    EXPECT_EQ(amb.candidates.size(), 7u);
    const std::vector<Permutation> far{Permutation::identity(4), Permutation::from_one_line({2, 3, 4, 1})};
    EXPECT_EQ(reconstruct(far, 1, g).status, ReconstructionStatus::Inconsistent);
    EXPECT_THROW(reconstruct(std::vector<Permutation>{}, 1, g), DomainError);
    const std::vector<Permutation> mixed{Permutation::identity(4), Permutation::identity(5)};
    EXPECT_THROW(reconstruct(mixed, 1, g), DegreeMismatch);
}

TEST(Reconstruct, AgreesWithBruteForceDecoder) {
    std::mt19937_64 rng(5);
    for (auto kind : kKinds) {
        const auto g = GeneratorSet::make(kind, 5);
        const DistanceTable table(g);
        for (int r = 1; r <= 2; ++r) {
            const Reconstructor rec(g, r);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<Permutation> pats;
                const auto x = unrank(5, rng() % 120);
                const auto m = 1 + rng() % 5;
                for (std::size_t i = 0; i < m; ++i) {
                    ChannelSpec spec{g, r, rng(), Distinctness::AllowRepeats, ErrorCountPolicy::UniformUpToR};
                    pats.push_back(distort(x, spec));
                }
                if (trial % 7 == 0) pats.push_back(unrank(5, rng() % 120)); // sometimes inconsistent
                EXPECT_EQ(rec(pats).candidates, brute_candidates(pats, r, table));
            }
        }
    }
}

// For n <= 4: every N+1 distinct points of some ball B_r(x) decode to x alone
// (all subsets checked), and N points of B_r(e) ∩ B_r(y) leave both e and y.
TEST(Reconstruct, ThresholdIsSharpExhaustivelyForSmallDegrees) {
    for (auto kind : kKinds) {
        for (int n = 3; n <= 4; ++n) {
            const auto g = GeneratorSet::make(kind, n);
            for (int r = 1; r <= 2; ++r) {
                const Int big_n = n_value(g, r).value;
                const Reconstructor rec(g, r);
                const auto& unit = rec.unit_ball();
                const auto members = std::vector<Permutation>(unit.members().begin(), unit.members().end());
                const auto m = static_cast<std::size_t>(big_n + 1);
                if (m > members.size()) continue;
                std::vector<bool> pick(members.size(), false);
                std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), true);
                std::size_t subsets = 0;
                do {
                    std::vector<Permutation> pats;
                    for (std::size_t i = 0; i < members.size(); ++i) {
                        if (pick[i]) pats.push_back(members[i]);
                    }
                    const auto res = rec(pats);
                    ASSERT_EQ(res.status, ReconstructionStatus::Unique) << short_name(kind) << " n=" << n;
                    ASSERT_TRUE(res.candidates.front().is_identity());
                    ++subsets;
                } while (std::next_permutation(pick.begin(), pick.end()) && subsets < 200'000);
                const auto w = ambiguity_witness(g, r);
                EXPECT_EQ(static_cast<Int>(w.patterns.size()), big_n);
                const auto res = rec(w.patterns);
                EXPECT_EQ(res.status, ReconstructionStatus::Ambiguous);
                EXPECT_TRUE(std::binary_search(res.candidates.begin(), res.candidates.end(), w.x));
                EXPECT_TRUE(std::binary_search(res.candidates.begin(), res.candidates.end(), w.y));
            }
        }
    }
}

TEST(Reconstruct, RandomSubsetsAboveThresholdAreUnique) {
    std::mt19937_64 rng(99);
    for (auto kind : kKinds) {
        for (int n = 5; n <= 6; ++n) {
            const auto g = GeneratorSet::make(kind, n);
            const int r = 1;
            const Int big_n = n_value(g, r).value;
            const Reconstructor rec(g, r);
            std::vector<Permutation> members(rec.unit_ball().members().begin(), rec.unit_ball().members().end());
            const int samples = 100'000;
            for (int t = 0; t < samples; ++t) {
                for (std::size_t i = 0; i < static_cast<std::size_t>(big_n + 1); ++i) {
                    std::swap(members[i], members[i + rng() % (members.size() - i)]);
                }
                const auto res = rec(std::span<const Permutation>(members).first(big_n + 1));
                ASSERT_EQ(res.status, ReconstructionStatus::Unique);
            }
        }
    }
}

TEST(Experiment, DeterministicAndIndependentOfWorkers) {
    const auto g = GeneratorSet::adjacent(5);
    ExperimentConfig cfg{g, 2, 50, 17, std::nullopt, ExperimentMode::Honest, ErrorCountPolicy::UniformUpToR, {}};
    const auto a = run_experiment(cfg);
    cfg.metric.workers = 4;
    const auto b = run_experiment(cfg);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(a.unique, a.trials);
    EXPECT_EQ(a.soundness_violations, 0u);
    EXPECT_EQ(a.m, static_cast<std::size_t>(a.reconstruction_number + 1));
    cfg.seed = 18;
    EXPECT_NE(to_json(run_experiment(cfg)).dump(), to_json(a).dump());
}

TEST(Experiment, AdversarialPatternsAreAlwaysAmbiguous) {
    for (auto kind : kKinds) {
        const auto g = GeneratorSet::make(kind, 5);
        ExperimentConfig cfg{g, 1, 30, 3, std::nullopt, ExperimentMode::Adversarial, ErrorCountPolicy::UniformUpToR, {}};
        const auto s = run_experiment(cfg);
        EXPECT_EQ(s.ambiguous, s.trials) << short_name(kind);
        EXPECT_EQ(s.soundness_violations, 0u);
        cfg.m = static_cast<std::size_t>(s.reconstruction_number + 1);
        EXPECT_THROW(run_experiment(cfg), DomainError);
    }
}

TEST(Experiment, CsvRowMatchesHeader) {
    const auto g = GeneratorSet::prefix(4);
    ExperimentConfig cfg{g, 1, 10, 1, std::nullopt, ExperimentMode::Honest, ErrorCountPolicy::ExactlyR, {}};
    const auto s = run_experiment(cfg);
    const auto header = experiment_csv_header();
    const auto row = experiment_csv_row(s);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
}
