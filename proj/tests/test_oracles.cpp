#include "support.hpp"
#include "tia/generators.hpp"
#include "tia/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tia;

TEST(ExactTreeAlpha, SmallFamilies)
{
    EXPECT_EQ(exact_tree_alpha(Graph(0)), 0);
    EXPECT_EQ(exact_tree_alpha(Graph(1)), 1);
    EXPECT_EQ(exact_tree_alpha(Graph(5)), 1);
    EXPECT_EQ(exact_tree_alpha(gen_complete(6)), 1);
    EXPECT_EQ(exact_tree_alpha(gen_path(7)), 1);
    EXPECT_EQ(exact_tree_alpha(gen_cycle(4)), 2);
    EXPECT_EQ(exact_tree_alpha(gen_cycle(8)), 2);
    EXPECT_EQ(exact_tree_alpha(gen_blowup(Graph(3))), 3);
    EXPECT_EQ(exact_tree_alpha(gen_blowup(Graph(4))), 4);
}

TEST(ExactTreeAlpha, ChordalGraphsGiveOne)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        EXPECT_EQ(exact_tree_alpha(gen_chordal(9, seed)), 1) << seed;
}

TEST(ExactTreeAlpha, AgreesWithSupergraphEnumeration)
{
    std::mt19937_64 eng(81);
    for (int round = 0; round < 120; ++round) {
        int n = 1 + static_cast<int>(eng() % 6);
        Graph g = gen_random(n, static_cast<double>(eng() % 100) / 100.0, eng());
        EXPECT_EQ(exact_tree_alpha(g), exact_tree_alpha_by_supergraphs(g)) << round;
    }
}

TEST(ExactTreeAlpha, BoundedByAlphaAndMonotone)
{
    std::mt19937_64 eng(82);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(eng() % 7);
        Graph g = gen_random(n, static_cast<double>(eng() % 100) / 100.0, eng());
        int t = exact_tree_alpha(g);
        EXPECT_LE(t, tia::test::brute_alpha(g, g.vertices()));
        VertexSet keep = g.vertices();
        keep.erase(static_cast<int>(eng() % static_cast<std::uint64_t>(n)));
        EXPECT_LE(exact_tree_alpha(induced(g, keep).graph), t);
    }
}

TEST(ExactTreeAlpha, RejectsLargeGraphs)
{
    EXPECT_THROW(exact_tree_alpha(Graph(10)), std::invalid_argument);
    EXPECT_THROW(exact_tree_alpha_by_supergraphs(Graph(7)), std::invalid_argument);
}

TEST(ExactSeparator, PathPicksFirstMinimum)
{
    Graph g = gen_path(4);
    SeparatorInstance inst(g, {VertexSet(4, {0}), VertexSet(4, {3}), VertexSet(4)}, VertexSet(4), VertexSet(4, {1, 2}), 1);
    auto res = exact_separator(inst);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->s, VertexSet(4, {1}));
    EXPECT_EQ(res->alpha, 1);
}

TEST(ExactSeparator, AdjacentTerminalsHaveNone)
{
    Graph g = gen_path(3);
    SeparatorInstance inst(g, {VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3)}, VertexSet(3), VertexSet(3, {2}), 1);
    EXPECT_FALSE(exact_separator(inst));
}

TEST(ExactSeparator, RespectsS0)
{
    Graph g = gen_cycle(6);
    SeparatorInstance inst(g, {VertexSet(6, {0}), VertexSet(6, {3}), VertexSet(6)}, VertexSet(6, {1}),
                           VertexSet(6, {2, 4, 5}), 2);
    auto res = exact_separator(inst);
    ASSERT_TRUE(res);
    EXPECT_TRUE(res->s.contains(1));
    EXPECT_TRUE(is_separator(g, res->s, {VertexSet(6, {0}), VertexSet(6, {3})}));
    EXPECT_EQ(res->alpha, 2);
}

TEST(ExactMwis, PathPrefersLowerIds)
{
    Graph g = gen_path(4);
    EXPECT_EQ(exact_mwis(g, {1, 1, 1, 1}), VertexSet(4, {0, 2}));
    EXPECT_EQ(exact_mwis(g, {1, 5, 1, 1}), VertexSet(4, {1, 3}));
}

TEST(ExactMwis, NonPositiveWeights)
{
    Graph g = gen_cycle(5);
    EXPECT_EQ(exact_mwis(g, {-1, -2, -3, -4, -5}), VertexSet(5));
    EXPECT_EQ(exact_mwis(g, {0, 0, 0, 0, 0}), VertexSet(5, {0, 2}));
}

TEST(ExactMwis, MatchesSubsetEnumeration)
{
    std::mt19937_64 eng(83);
    for (int round = 0; round < 80; ++round) {
        int n = 1 + static_cast<int>(eng() % 10);
        Graph g = gen_random(n, static_cast<double>(eng() % 100) / 100.0, eng());
        std::vector<long long> w(static_cast<std::size_t>(n));
        for (auto& x : w)
            x = static_cast<long long>(eng() % 21) - 5;
        long long best = 0;
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            VertexSet s = tia::test::from_mask(n, mask);
            if (!is_independent(g, s))
                continue;
            long long total = 0;
            for (int v : s)
                total += w[static_cast<std::size_t>(v)];
            best = std::max(best, total);
        }
        VertexSet got = exact_mwis(g, w);
        EXPECT_TRUE(is_independent(g, got));
        long long total = 0;
        for (int v : got)
            total += w[static_cast<std::size_t>(v)];
        EXPECT_EQ(total, best);
    }
}

TEST(ExactMwis, RejectsBadInput)
{
    EXPECT_THROW(exact_mwis(Graph(25), std::vector<long long>(25, 1)), std::invalid_argument);
    EXPECT_THROW(exact_mwis(Graph(3), {1, 2}), std::invalid_argument);
}
