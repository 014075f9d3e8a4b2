#include <gtest/gtest.h>

#include "edgedecomp/k_irregular.hpp"
#include "edgedecomp/solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace edgedecomp;

TEST(KIrregularConditions, GeneratedInstancesSatisfyAll)
{
    support::Rng rng(71);
    for (unsigned k : {2u, 3u, 4u})
        for (int round = 0; round < 50; ++round) {
            const auto g = support::random_k_irregular_instance(k, support::uniform(rng, 1, 4), rng);
            const auto r = k_irregular_conditions(g, k);
            EXPECT_TRUE(r.all());
            EXPECT_FALSE(r.violating_edge);
        }
}

TEST(KIrregularConditions, EachViolationIsReported)
{
    // k = 2, hubs have degree 3
    const Graph a(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    const auto ra = k_irregular_conditions(a, 2);
    EXPECT_FALSE(ra.condition_a);
    EXPECT_EQ(ra.violating_edge, EdgeIndex{3});

    const Graph b(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    const auto rb = k_irregular_conditions(b, 2);
    EXPECT_FALSE(rb.condition_b);
    EXPECT_TRUE(rb.condition_a);

    // k = 3: a hub next to a degree-3 vertex
    const Graph c(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {6, 7}, {6, 8}});
    const auto rc = k_irregular_conditions(c, 3);
    EXPECT_FALSE(rc.condition_c);

    EXPECT_THROW(k_irregular_conditions(a, 3), PreconditionError);
}

TEST(KIrregularTwoParts, AgreesWithExactSolver)
{
    support::Rng rng(72);
    int feasible = 0, infeasible = 0;
    for (unsigned k : {2u, 3u})
        for (int round = 0; round < 100; ++round) {
            const auto hubs = support::uniform(rng, 1, k == 2 ? 5 : 4);
            const auto g = support::random_k_irregular_instance(k, hubs, rng);
            ASSERT_LE(g.edge_count(), 16u);
            const auto fast = k_irregular_two_parts(g, k);
            const std::vector<PartPredicate> preds(2, PartPredicate::locally_k_irregular(k));
            const auto exact = decide(g, preds);
            ASSERT_NE(exact.status, SolveStatus::BudgetExhausted);
            EXPECT_EQ(fast.has_value(), exact.feasible()) << serialize_graph(g, GraphFormat::EdgeList);
            if (fast) {
                ++feasible;
                EXPECT_TRUE(verify_partition(g, *fast, preds));
            } else {
                ++infeasible;
            }
        }
    EXPECT_GT(feasible, 20);
    EXPECT_GT(infeasible, 20);
}

TEST(KIrregularTwoParts, OddHubCycleIsInfeasible)
{
    // three hubs in a ring of connectors, k = 2
    GraphBuilder b;
    const auto h = b.add_vertices(3, "h");
    for (int i = 0; i < 3; ++i) {
        const auto z = b.add_vertex("z" + std::to_string(i));
        b.add_edge(h[i], z);
        b.add_edge(h[(i + 1) % 3], z);
        b.add_edge(h[i], b.add_vertex("l" + std::to_string(i)));
    }
    const auto g = b.build();
    EXPECT_TRUE(k_irregular_conditions(g, 2).all());
    EXPECT_FALSE(k_irregular_two_parts(g, 2));
    EXPECT_FALSE(decide(g, std::vector<PartPredicate>(2, PartPredicate::locally_k_irregular(2))).feasible());
}

TEST(KIrregularTwoParts, SingleHubCannotFillTwoParts)
{
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_FALSE(k_irregular_two_parts(star, 2));
    EXPECT_FALSE(decide(star, std::vector<PartPredicate>(2, PartPredicate::locally_k_irregular(2))).feasible());
}
