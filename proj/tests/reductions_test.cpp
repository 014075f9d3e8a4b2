#include <gtest/gtest.h>

#include "edgedecomp/reductions.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace edgedecomp;

namespace {

void round_trip(const Formula& f, const ReductionParams& params = {})
{
    const auto g = reduce_to_graph(f, params);
    const auto preds = reduction_predicates(f, params);
    const auto a = brute_force_assignment(f);
    ASSERT_TRUE(a);
    const auto p = assignment_to_decomposition(f, *a, g, params);
    EXPECT_TRUE(verify_partition(g, p, preds));
    const auto back = decomposition_to_assignment(f, g, p, params);
    EXPECT_TRUE(satisfies(f, back));
}

} // namespace

TEST(Reductions, PredicatesPerVariant)
{
    const Formula nae{FormulaVariant::NaeCubic, 2, {{0, 1}, {0, 1}, {0, 1}}};
    EXPECT_EQ(reduction_predicates(nae), std::vector<PartPredicate>(2, PartPredicate::regular()));
    const Formula two{FormulaVariant::TwoInFour, 4, {{0, 1, 2, 3}}};
    EXPECT_EQ(reduction_predicates(two, {3, 4}),
              std::vector<PartPredicate>(2, PartPredicate::locally_k_irregular(4)));
}

TEST(Reductions, NaeSmallest)
{
    const Formula f{FormulaVariant::NaeCubic, 2, {{0, 1}, {0, 1}, {0, 1}}};
    round_trip(f);
    round_trip(f, {4, 2});
}

TEST(Reductions, TwoInFourSingleClause)
{
    const Formula f{FormulaVariant::TwoInFour, 4, {{0, 1, 2, 3}}};
    for (unsigned k : {2u, 3u})
        round_trip(f, {3, k});
}

TEST(Reductions, EveryModelGivesADecomposition)
{
    const Formula f{FormulaVariant::TwoInFour, 5, {{0, 1, 2, 3}, {1, 2, 3, 4}}};
    const auto g = reduce_to_graph(f);
    int models = 0;
    for (unsigned mask = 0; mask < 32; ++mask) {
        Assignment a{std::vector<bool>(5)};
        for (int i = 0; i < 5; ++i)
            a.values[i] = mask >> i & 1;
        if (!satisfies(f, a)) {
            EXPECT_THROW(assignment_to_decomposition(f, a, g), PreconditionError);
            continue;
        }
        ++models;
        const auto p = assignment_to_decomposition(f, a, g);
        const auto back = decomposition_to_assignment(f, g, p);
        EXPECT_EQ(back.values, a.values);
    }
    EXPECT_GT(models, 0);
}

TEST(Reductions, RandomFormulasRoundTrip)
{
    support::Rng rng(101);
    int done[3] = {0, 0, 0};
    for (int round = 0; round < 300 && (done[0] < 4 || done[1] < 4 || done[2] < 4); ++round) {
        std::optional<Formula> f;
        const int v = round % 3;
        if (v == 0)
            f = support::random_one_in_three(6, rng);
        else if (v == 1)
            f = support::random_nae(support::uniform(rng, 2, 5), rng);
        else
            f = support::random_two_in_four(support::uniform(rng, 4, 6), support::uniform(rng, 1, 2), rng);
        if (!f || done[v] >= 4 || !brute_force_assignment(*f))
            continue;
        SCOPED_TRACE(serialize_formula(*f));
        round_trip(*f);
        ++done[v];
    }
    EXPECT_EQ(done[0], 4);
    EXPECT_EQ(done[1], 4);
    EXPECT_EQ(done[2], 4);
}

TEST(Reductions, RejectsMismatchedInputs)
{
    const Formula f{FormulaVariant::NaeCubic, 2, {{0, 1}, {0, 1}, {0, 1}}};
    const auto g = reduce_to_graph(f);
    const auto other = reduce_to_graph(f, {4, 2});
    const Assignment a{{true, false}};
    EXPECT_THROW(assignment_to_decomposition(f, a, other), PreconditionError);
    EXPECT_THROW(assignment_to_decomposition(f, Assignment{{true, true}}, g), PreconditionError);
    EXPECT_THROW(decomposition_to_assignment(f, g, EdgePartition{{g.all_edges()}}), PreconditionError);
    EXPECT_THROW(reduce_to_graph(Formula{FormulaVariant::NaeCubic, 2, {{0, 1}}}), PreconditionError);
}

TEST(Reductions, GraphsAreConnectedWhereExpected)
{
    const Formula two{FormulaVariant::TwoInFour, 4, {{0, 1, 2, 3}}};
    EXPECT_TRUE(is_connected(reduce_to_graph(two)));
    support::Rng rng(102);
    const auto f = support::random_one_in_three(6, rng);
    ASSERT_TRUE(f);
    const auto g = reduce_to_graph(*f);
    EXPECT_GT(g.edge_count(), 20u);
}

TEST(Reductions, NaeSwappedPartsGiveComplement)
{
    const Formula f{FormulaVariant::NaeCubic, 2, {{0, 1}, {0, 1}, {0, 1}}};
    const auto g = reduce_to_graph(f);
    const Assignment a{{true, false}};
    const auto p = assignment_to_decomposition(f, a, g);
    const EdgePartition swapped{{p.parts[1], p.parts[0]}};
    const auto back = decomposition_to_assignment(f, g, swapped);
    EXPECT_EQ(back.values, (std::vector<bool>{false, true}));
}

TEST(Reductions, OneInThreeCountingRule)
{
    // every variable occurs three times and every clause has one true variable, so 3T = m
    support::Rng rng(103);
    for (std::size_t m : {4u, 8u, 10u}) {
        for (int round = 0; round < 5; ++round) {
            const auto f = support::random_one_in_three(m, rng);
            ASSERT_TRUE(f);
            EXPECT_FALSE(brute_force_assignment(*f));
        }
    }
}
