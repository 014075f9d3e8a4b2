#include <gtest/gtest.h>

#include "edgedecomp/predicates.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace edgedecomp;
using support::OracleRule;
using support::Rule;

namespace {

const std::vector<std::pair<PartPredicate, OracleRule>>& all_rules()
{
    static const std::vector<std::pair<PartPredicate, OracleRule>> rules{
        {PartPredicate::regular(), {Rule::Regular}},
        {PartPredicate::locally_regular(), {Rule::LocallyRegular}},
        {PartPredicate::locally_irregular(), {Rule::LocallyIrregular}},
        {PartPredicate::locally_k_irregular(1), {Rule::KIrregular, 1}},
        {PartPredicate::locally_k_irregular(2), {Rule::KIrregular, 2}},
        {PartPredicate::locally_k_irregular(3), {Rule::KIrregular, 3}},
        {PartPredicate::regular_or_locally_irregular(), {Rule::RegOrIrr}},
        {PartPredicate::componentwise_regular_or_locally_irregular(), {Rule::CompRegOrIrr}},
        {PartPredicate::matching(), {Rule::Matching}},
    };
    return rules;
}

} // namespace

TEST(Predicates, SmallExamples)
{
    const Graph p3(3, {{0, 1}, {1, 2}});
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto all3 = p3.all_edges();
    EXPECT_TRUE(satisfies(p3, all3, PartPredicate::locally_irregular()));
    EXPECT_FALSE(satisfies(p3, all3, PartPredicate::regular()));
    EXPECT_FALSE(satisfies(p4, p4.all_edges(), PartPredicate::locally_irregular()));
    EXPECT_TRUE(satisfies(star, star.all_edges(), PartPredicate::locally_k_irregular(2)));
    EXPECT_FALSE(satisfies(star, star.all_edges(), PartPredicate::locally_k_irregular(3)));
    EXPECT_TRUE(satisfies(p4, EdgeSubset{0, 2}, PartPredicate::matching()));
    EXPECT_TRUE(satisfies(p4, EdgeSubset{0, 2}, PartPredicate::regular()));
    // two components: an edge (regular) and nothing else irregular
    const Graph mix(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    EXPECT_FALSE(satisfies(mix, mix.all_edges(), PartPredicate::regular_or_locally_irregular()));
    EXPECT_FALSE(satisfies(mix, mix.all_edges(), PartPredicate::componentwise_regular_or_locally_irregular()));
    const Graph mix2(6, {{0, 1}, {2, 3}, {3, 4}, {3, 5}});
    EXPECT_FALSE(satisfies(mix2, mix2.all_edges(), PartPredicate::regular_or_locally_irregular()));
    EXPECT_TRUE(satisfies(mix2, mix2.all_edges(), PartPredicate::componentwise_regular_or_locally_irregular()));
}

TEST(Predicates, EmptyPartIsRejected)
{
    const Graph p3(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(satisfies(p3, EdgeSubset{}, PartPredicate::regular()), PreconditionError);
    EXPECT_THROW(satisfies(p3, EdgeSubset{4}, PartPredicate::regular()), GraphError);
    EXPECT_THROW(PartPredicate::locally_k_irregular(0), PreconditionError);
}

TEST(Predicates, MatchOracleOnRandomSubsets)
{
    support::Rng rng(21);
    for (int round = 0; round < 400; ++round) {
        const auto g = support::random_connected_graph(support::uniform(rng, 2, 10), 16, 5, rng);
        std::vector<EdgeIndex> pick;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (support::uniform(rng, 0, 2))
                pick.push_back(e);
        if (pick.empty())
            continue;
        for (const auto& [pred, rule] : all_rules())
            EXPECT_EQ(satisfies(g, EdgeSubset(pick), pred), support::oracle_ok(g, pick, rule)) << to_string(pred);
    }
}

TEST(Predicates, KIrregularIsMonotoneInK)
{
    support::Rng rng(22);
    for (int round = 0; round < 200; ++round) {
        const auto g = support::random_connected_graph(support::uniform(rng, 2, 10), 14, 6, rng);
        const auto s = g.all_edges();
        for (unsigned k = 1; k < 5; ++k)
            if (satisfies(g, s, PartPredicate::locally_k_irregular(k + 1)))
                EXPECT_TRUE(satisfies(g, s, PartPredicate::locally_k_irregular(k)));
        EXPECT_EQ(satisfies(g, s, PartPredicate::locally_k_irregular(1)),
                  satisfies(g, s, PartPredicate::locally_irregular()));
    }
}

TEST(Predicates, ParseNames)
{
    EXPECT_EQ(parse_predicate("regular"), PartPredicate::regular());
    EXPECT_EQ(parse_predicate("k-irr", 3), PartPredicate::locally_k_irregular(3));
    EXPECT_EQ(to_string(PartPredicate::locally_k_irregular(3)), "k-irr(3)");
    const auto list = parse_predicate_list("regular,locally-irregular");
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list[1], PartPredicate::locally_irregular());
    EXPECT_THROW(parse_predicate("blue"), PreconditionError);
    EXPECT_THROW(parse_predicate_list("regular,"), PreconditionError);
}

TEST(VerifyPartition, BroadcastAndPerPartPredicates)
{
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const EdgePartition split{{{0, 2}, {1}}};
    EXPECT_TRUE(verify_partition(p4, split, PartPredicate::matching()));
    const std::vector<PartPredicate> two{PartPredicate::regular(), PartPredicate::locally_irregular()};
    EXPECT_FALSE(verify_partition(p4, split, two));
    const EdgePartition other{{{2}, {0, 1}}};
    EXPECT_TRUE(verify_partition(p4, other, two));
    const std::vector<PartPredicate> three(3, PartPredicate::regular());
    EXPECT_THROW(verify_partition(p4, split, three), PreconditionError);
    EXPECT_FALSE(verify_partition(p4, EdgePartition{{{0}, {1}}}, PartPredicate::regular()));
}
