#include "support.hpp"
#include "tia/generators.hpp"
#include "tia/oracles.hpp"
#include "tia/separator.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tia;

namespace {

SeparatorInstance make(const Graph& g, VertexSet v1, VertexSet v2, VertexSet r, int k,
                       std::optional<VertexSet> v3 = std::nullopt, std::optional<VertexSet> s0 = std::nullopt)
{
    int n = g.order();
    return SeparatorInstance(g, {std::move(v1), std::move(v2), v3.value_or(VertexSet(n))}, s0.value_or(VertexSet(n)),
                             std::move(r), k);
}

bool has_row(const LinearProgram& lp, const std::vector<int>& vars, Relation rel, int rhs)
{
    for (const auto& row : lp.constraints()) {
        if (row.rel != rel || row.rhs != rhs || row.terms.size() != vars.size())
            continue;
        bool same = true;
        for (std::size_t i = 0; i < vars.size(); ++i)
            same = same && row.terms[i].var == vars[i] && row.terms[i].coeff == 1;
        if (same)
            return true;
    }
    return false;
}

/// a = 0 and b = 1 joined through three pairwise non-adjacent vertices 2, 3, 4.
Graph three_paths()
{
    GraphBuilder b(5);
    b.join({0, 1}, {2, 3, 4});
    return b.build();
}

} // namespace

TEST(Normalize, Examples)
{
    Graph p3 = gen_path(3); // a=0, c=1, b=2
    auto inst = make(p3, VertexSet(3, {0}), VertexSet(3, {2}), VertexSet(3, {1}), 1);
    auto norm = normalize(inst);
    ASSERT_TRUE(norm);
    EXPECT_EQ(norm->terminals[0], VertexSet(3, {0}));
    EXPECT_EQ(norm->terminals[1], VertexSet(3, {2}));

    Graph e(2, {{0, 1}});
    EXPECT_FALSE(normalize(make(e, VertexSet(2, {0}), VertexSet(2, {1}), VertexSet(2), 1)));

    Graph p4 = gen_path(4); // a=0, x=1, c=2, b=3
    auto n4 = normalize(make(p4, VertexSet(4, {0}), VertexSet(4, {3}), VertexSet(4, {2}), 1));
    ASSERT_TRUE(n4);
    EXPECT_EQ(n4->terminals[0], VertexSet(4, {0, 1}));
}

TEST(BuildLp, ZeroBudgetForbidsEveryVertex)
{
    Graph p3 = gen_path(3);
    auto lp = build_lp(make(p3, VertexSet(3, {0}), VertexSet(3, {2}), VertexSet(3, {1}), 0)).lp;
    EXPECT_TRUE(has_row(lp, {0}, Relation::less_equal, 0));
    EXPECT_FALSE(simplex_solve(lp).feasible);
}

TEST(BuildLp, CommonNeighboursAreForced)
{
    Graph g = three_paths();
    auto sep = build_lp(make(g, VertexSet(5, {0}), VertexSet(5, {1}), VertexSet(5, {2, 3, 4}), 1));
    EXPECT_EQ(sep.vertex_of_var, (std::vector<int>{2, 3, 4}));
    for (int j = 0; j < 3; ++j)
        EXPECT_TRUE(has_row(sep.lp, {j}, Relation::greater_equal, 1));
    EXPECT_TRUE(has_row(sep.lp, {0, 1, 2}, Relation::less_equal, 1));
    EXPECT_FALSE(simplex_solve(sep.lp).feasible);
}

TEST(BuildLp, SinglePairOnPath)
{
    Graph p4 = gen_path(4); // a=0, u1=1, u2=2, b=3
    auto sep = build_lp(make(p4, VertexSet(4, {0}), VertexSet(4, {3}), VertexSet(4, {1, 2}), 1));
    EXPECT_EQ(sep.lp.num_constraints(), 1);
    EXPECT_TRUE(has_row(sep.lp, {0, 1}, Relation::greater_equal, 1));
}

TEST(LpSeparator, Examples)
{
    Graph p3 = gen_path(3);
    auto r1 = lp_separator(make(p3, VertexSet(3, {0}), VertexSet(3, {2}), VertexSet(3, {1}), 1));
    ASSERT_TRUE(r1.found());
    EXPECT_EQ(*r1.separator, VertexSet(3, {1}));

    Graph p4 = gen_path(4);
    auto r2 = lp_separator(make(p4, VertexSet(4, {0}), VertexSet(4, {3}), VertexSet(4, {1, 2}), 1));
    ASSERT_TRUE(r2.found());
    // The simplex optimum is a vertex of the LP, so one of u1, u2 suffices.
    EXPECT_TRUE(is_separator(p4, *r2.separator, {VertexSet(4, {0}), VertexSet(4, {3})}));
    EXPECT_TRUE(r2.separator->is_subset_of(VertexSet(4, {1, 2})));
    EXPECT_LE(alpha(p4, *r2.separator), 2);

    Graph g = three_paths();
    auto inst = make(g, VertexSet(5, {0}), VertexSet(5, {1}), VertexSet(5, {2, 3, 4}), 1);
    EXPECT_FALSE(lp_separator(inst).found());
    auto exact = exact_separator(inst);
    ASSERT_TRUE(exact);
    EXPECT_EQ(exact->alpha, 3);
}

TEST(LpSeparator, HalfIntegralOptimumRoundsUp)
{
    // Terminals 0, 1, 2 with private neighbours 3, 4, 5 forming a triangle:
    // the pair rows form an odd cycle whose only optimum is all halves.
    Graph g(6, {{0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {3, 5}});
    auto inst = make(g, VertexSet(6, {0}), VertexSet(6, {1}), VertexSet(6, {3, 4, 5}), 1, VertexSet(6, {2}));
    auto sep = build_lp(inst);
    auto sol = simplex_solve(sep.lp);
    ASSERT_TRUE(sol.feasible);
    EXPECT_EQ(sol.objective, Rational(3, 2));
    for (const auto& x : sol.x)
        EXPECT_EQ(x, Rational(1, 2));
    auto res = lp_separator(inst);
    ASSERT_TRUE(res.found());
    EXPECT_EQ(*res.separator, VertexSet(6, {3, 4, 5}));
}

TEST(LpSeparator, TrivialRejections)
{
    Graph e(3, {{0, 1}});
    EXPECT_FALSE(lp_separator(make(e, VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3), 1)).found());
    Graph p3 = gen_path(3);
    EXPECT_FALSE(
        lp_separator(make(p3, VertexSet(3, {0}), VertexSet(3), VertexSet(3), 0, std::nullopt, VertexSet(3, {1, 2})))
            .found());
}

TEST(LpSeparator, RejectsFarCandidates)
{
    Graph p4 = gen_path(4);
    // Vertex 3 is neither a terminal neighbour nor reachable into one.
    auto inst = make(p4, VertexSet(4, {0}), VertexSet(4), VertexSet(4, {1, 3}), 1, std::nullopt, VertexSet(4, {2}));
    EXPECT_THROW(lp_separator(inst), std::invalid_argument);
}

TEST(LpSeparator, RejectsOverlappingSets)
{
    Graph p3 = gen_path(3);
    EXPECT_THROW(lp_separator(make(p3, VertexSet(3, {0}), VertexSet(3, {0}), VertexSet(3), 1)), std::invalid_argument);
}

TEST(LpSeparator, SoundAgainstExactSeparator)
{
    std::mt19937_64 eng(51);
    int found = 0, none = 0;
    for (int round = 0; round < 300; ++round) {
        int n = 4 + static_cast<int>(eng() % 11);
        int k = 1 + static_cast<int>(eng() % 2);
        Graph g = gen_random(n, 0.15 + static_cast<double>(eng() % 30) / 100.0, eng());
        std::array<VertexSet, 3> t{VertexSet(n), VertexSet(n), VertexSet(n)};
        VertexSet s0(n);
        int parts = 2 + static_cast<int>(eng() % 2);
        for (int v = 0; v < n; ++v) {
            int roll = static_cast<int>(eng() % 10);
            if (roll < parts)
                t[static_cast<std::size_t>(roll)].insert(v);
            else if (roll == 9 && eng() % 3 == 0)
                s0.insert(v);
        }
        VertexSet tu = t[0] | t[1] | t[2];
        VertexSet r = g.neighborhood(tu) - s0;
        SeparatorInstance inst(g, t, s0, r, k);
        auto res = lp_separator(inst);
        auto exact = exact_separator(inst);
        if (res.found()) {
            ++found;
            const auto& s = *res.separator;
            EXPECT_TRUE(is_separator(g, s, inst.terminal_parts()));
            EXPECT_LE(alpha(g, s), 2 * k);
            EXPECT_TRUE(s0.is_subset_of(s));
            EXPECT_TRUE(s.is_subset_of(s0 | r));
        } else {
            ++none;
            EXPECT_TRUE(!exact || exact->alpha > k) << "round " << round;
        }
    }
    EXPECT_GT(found, 30);
    EXPECT_GT(none, 30);
}
