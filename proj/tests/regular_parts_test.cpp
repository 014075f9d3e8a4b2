#include <gtest/gtest.h>

#include "edgedecomp/regular_parts.hpp"
#include "edgedecomp/solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace edgedecomp;

TEST(TwoRegularParts, AgreesWithExhaustiveSearch)
{
    support::Rng rng(51);
    int feasible = 0;
    for (int round = 0; round < 300; ++round) {
        const auto g = support::random_low_degree_graph(rng);
        const auto fast = two_regular_parts_low_degree(g);
        const auto oracle = support::oracle_partition(g, {{support::Rule::Regular}, {support::Rule::Regular}});
        EXPECT_EQ(fast.has_value(), oracle.has_value()) << serialize_graph(g, GraphFormat::EdgeList);
        if (fast) {
            ++feasible;
            EXPECT_TRUE(verify_partition(g, *fast, PartPredicate::regular()));
            EXPECT_EQ(fast->size(), 2u);
        }
    }
    EXPECT_GT(feasible, 30);
}

TEST(TwoRegularParts, KnownFamilies)
{
    // even cycle: two perfect matchings
    EXPECT_TRUE(two_regular_parts_low_degree(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
    // odd cycle: impossible
    EXPECT_FALSE(two_regular_parts_low_degree(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
    // K4 = perfect matching + 4-cycle
    EXPECT_TRUE(two_regular_parts_low_degree(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
    // star K_{1,5}: leaves force degree 1 on a part that would need the center at degree >= 2
    EXPECT_FALSE(two_regular_parts_low_degree(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));
    // bowtie: one triangle per part
    EXPECT_TRUE(two_regular_parts_low_degree(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
    // single edge cannot be split into two nonempty parts
    EXPECT_FALSE(two_regular_parts_low_degree(Graph(2, {{0, 1}})));
}

TEST(TwoRegularParts, RejectsOutOfDomainInput)
{
    EXPECT_THROW(two_regular_parts_low_degree(Graph(2, {})), PreconditionError);
    EXPECT_THROW(two_regular_parts_low_degree(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
    std::vector<Edge> star;
    for (Vertex i = 1; i <= 6; ++i)
        star.push_back({0, i});
    EXPECT_THROW(two_regular_parts_low_degree(Graph(7, star)), PreconditionError);
}
