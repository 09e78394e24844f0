#include <gtest/gtest.h>

#include <random>

#include "isolev/constructs.hpp"
#include "isolev/error.hpp"
#include "isolev/isometry.hpp"
#include "support.hpp"

using namespace isolev;

namespace {

const Weights kUnit{Rat{1}, Rat{1}};

DistanceMatrix line_metric(const std::vector<std::int64_t>& points) {
    const auto n = points.size();
    std::vector<Rat> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = Rat(points[i] > points[j] ? points[i] - points[j] : points[j] - points[i]);
        }
    }
    return make_matrix(n, std::move(e));
}

void expect_sound(const DistanceMatrix& d, const PermutationGroup& g) {
    for (const auto& p : g.generators()) {
        EXPECT_TRUE(preserves(d, p)) << p;
    }
}

}  // namespace

TEST(Isometries, SmallExamples) {
    EXPECT_EQ(group_order(isometries(line_metric({0, 5}))), 2);
    EXPECT_EQ(group_order(isometries(line_metric({0, 1, 3}))), 1);
    EXPECT_EQ(group_order(isometries(line_metric({7}))), 1);
    EXPECT_EQ(group_order(isometries(make_matrix(0, {}))), 1);
    const auto k4 = distance_matrix(theorem2_language(catalog_entry("K4").graph), kUnit);
    EXPECT_EQ(group_order(isometries(k4)), 24);
}

TEST(IsometriesBrute, Examples) {
    EXPECT_EQ(group_order(isometries_brute(line_metric({3}))), 1);
    const auto unary = distance_matrix(unary_language({0, 1, 2}), kUnit);
    const auto g = isometries_brute(unary);
    EXPECT_EQ(group_order(g), 2);
    // definitional: every preserving permutation is a listed generator
    EXPECT_EQ(g.generators().size(), 2u);
    EXPECT_THROW((void)isometries_brute(line_metric({0, 1, 2, 3, 4, 5, 6, 7, 8, 9})), Error);
}

TEST(Isometries, AgreeWithBruteForceOnRandomMetrics) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 80; ++trial) {
        const auto d = test_support::random_small_metric(rng, size(rng));
        ASSERT_TRUE(d.is_metric());
        const auto fast = isometries(d);
        const auto brute = isometries_brute(d);
        expect_sound(d, fast);
        EXPECT_TRUE(same_group(fast, brute));
        EXPECT_EQ(group_order(brute), brute.generators().size());
    }
}

TEST(Isometries, AgreeWithBruteForceOnSmallLanguages) {
    // every language of at most 4 binary words of length <= 2
    const auto words = test_support::all_words_up_to(2);
    const std::size_t m = words.size();
    std::size_t checked = 0;
    for (std::size_t mask = 1; mask < (1U << m); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 4) {
            continue;
        }
        std::vector<Word> chosen;
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) {
                chosen.push_back(words[i]);
            }
        }
        for (const auto& w : {kUnit, Weights{Rat(1), Rat(2)}}) {
            const auto d = distance_matrix(Language(chosen), w);
            ASSERT_TRUE(same_group(isometries(d), isometries_brute(d)));
            ++checked;
        }
    }
    EXPECT_EQ(checked, 2u * (7 + 21 + 35 + 35));
}

TEST(Isometries, IsDeterministic) {
    const auto d = distance_matrix(theorem6_language(TruncationSpec(2)), kUnit);
    EXPECT_EQ(isometries(d).generators(), isometries(d).generators());
}

TEST(Isometries, OrbitsSeeConstantDistanceProfiles) {
    const auto lang = theorem3_language({catalog_entry("K4").graph}, TruncationSpec(1));
    const auto d = distance_matrix(lang, kUnit);
    const auto part = orbits(isometries(d));
    for (const auto& block : part.blocks) {
        for (const auto& other : part.blocks) {
            std::vector<Rat> reference;
            for (std::size_t k = 0; k < block.size(); ++k) {
                std::vector<Rat> profile;
                for (const int j : other) {
                    profile.push_back(d(static_cast<std::size_t>(block[k]), static_cast<std::size_t>(j)));
                }
                std::sort(profile.begin(), profile.end());
                if (k == 0) {
                    reference = profile;
                } else {
                    EXPECT_EQ(profile, reference);
                }
            }
        }
    }
}

TEST(GraphAutomorphisms, Catalog) {
    for (const auto& entry : catalog()) {
        const auto g = graph_automorphisms(entry.graph);
        EXPECT_EQ(group_order(g), entry.automorphism_order) << entry.name;
        EXPECT_EQ(test_support::count_automorphisms(entry.graph), entry.automorphism_order) << entry.name;
        for (const auto& p : g.generators()) {
            for (const auto& [u, v] : entry.graph.edges()) {
                EXPECT_TRUE(entry.graph.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]));
            }
        }
    }
}

TEST(GraphAutomorphisms, PetersenAgainstAllPermutations) {
    const auto& petersen = catalog_entry("Petersen").graph;
    std::vector<int> img(10);
    std::iota(img.begin(), img.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (const auto& [u, v] : petersen.edges()) {
            if (!petersen.adjacent(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(img.begin(), img.end()));
    EXPECT_EQ(count, 120u);
}
