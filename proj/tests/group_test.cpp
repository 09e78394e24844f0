#include <gtest/gtest.h>

#include <random>

#include "isolev/error.hpp"
#include "isolev/group.hpp"
#include "support.hpp"

using namespace isolev;

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST(Permutation, Basics) {
    const auto c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    EXPECT_EQ(c.images(), (std::vector<int>{1, 2, 3, 0}));
    EXPECT_EQ(c.order(), 4u);
    EXPECT_TRUE((c * c.inverse()).is_identity());
    const auto t = Permutation::from_cycles(4, {{0, 1}});
    // apply t first, then c
    EXPECT_EQ((t * c).images(), (std::vector<int>{2, 1, 3, 0}));
    EXPECT_EQ(format_permutation(t), "[1, 0, 2, 3]");
    EXPECT_THROW(Permutation({0, 0}), Error);
}

TEST(GroupOrder, Examples) {
    const PermutationGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    EXPECT_EQ(group_order(s4), 24);
    EXPECT_EQ(group_order(PermutationGroup(5)), 1);
    EXPECT_EQ(group_order(PermutationGroup(0)), 1);
}

TEST(GroupOrder, MatchesNaiveClosure) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> degree(1, 7);
    std::uniform_int_distribution<int> count(0, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = degree(rng);
        std::vector<Permutation> gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            // sparse generators keep many groups small and non-transitive
            auto p = Permutation::identity(n);
            if (n > 1 && (rng() & 1U) != 0U) {
                std::vector<int> img = p.images();
                std::swap(img[rng() % n], img[rng() % n]);
                p = Permutation(img);
            } else {
                p = random_permutation(rng, n);
            }
            gens.push_back(p);
        }
        const PermutationGroup g(n, gens);
        const auto all = test_support::closure(n, gens);
        EXPECT_EQ(group_order(g), all.size());
        for (const auto& img : all) {
            EXPECT_TRUE(contains(g, Permutation(img)));
        }
        const auto els = elements(g, 10000);
        EXPECT_EQ(els.size(), all.size());
    }
}

TEST(Contains, Examples) {
    const PermutationGroup c3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
    EXPECT_TRUE(contains(c3, Permutation::identity(3)));
    EXPECT_FALSE(contains(c3, Permutation::from_cycles(3, {{0, 1}})));
    EXPECT_THROW((void)contains(c3, Permutation::identity(4)), Error);
}

TEST(SameGroup, Examples) {
    const PermutationGroup a(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    const PermutationGroup b(4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{2, 3}})});
    const PermutationGroup c(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    EXPECT_TRUE(same_group(a, a));
    EXPECT_TRUE(same_group(a, b));
    EXPECT_FALSE(same_group(a, c));
    EXPECT_THROW((void)same_group(a, PermutationGroup(3)), Error);
}

TEST(Orbits, Examples) {
    EXPECT_EQ(orbits(PermutationGroup(3)).blocks, (std::vector<std::vector<int>>{{0}, {1}, {2}}));
    const PermutationGroup g(5, {Permutation::from_cycles(5, {{1, 3}}), Permutation::from_cycles(5, {{3, 4}})});
    EXPECT_EQ(orbits(g).blocks, (std::vector<std::vector<int>>{{0}, {1, 3, 4}, {2}}));
}

TEST(Elements, Examples) {
    EXPECT_EQ(elements(PermutationGroup(3), 1), std::vector<Permutation>{Permutation::identity(3)});
    EXPECT_EQ(elements(PermutationGroup(3, {Permutation::from_cycles(3, {{0, 1, 2}})}), 10).size(), 3u);
    const PermutationGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    EXPECT_THROW((void)elements(s4, 23), Error);
}

TEST(AbstractIsomorphism, Examples) {
    const PermutationGroup swap2(2, {Permutation::from_cycles(2, {{0, 1}})});
    const PermutationGroup swap5(5, {Permutation::from_cycles(5, {{2, 4}, {1, 3}})});
    EXPECT_TRUE(abstract_isomorphic(swap2, swap5));

    const PermutationGroup cyclic(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    const PermutationGroup klein(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
    EXPECT_FALSE(abstract_isomorphic(cyclic, klein));

    // S3 acting on 3 points vs on 6 points (regular action)
    const PermutationGroup s3(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
    const PermutationGroup s3_regular(6, {Permutation::from_cycles(6, {{0, 3}, {1, 5}, {2, 4}}),
                                         Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}})});
    const PermutationGroup c6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    EXPECT_EQ(group_order(s3_regular), 6);
    EXPECT_TRUE(abstract_isomorphic(s3, s3_regular));
    EXPECT_FALSE(abstract_isomorphic(s3, c6));
    EXPECT_THROW((void)abstract_isomorphic(s3, c6, 5), Error);
}
