#include <gtest/gtest.h>

#include <map>

#include "edgedecomp/semicoloring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/small_graphs.hpp"

using namespace edgedecomp;

namespace {

/// Semi-coloring conditions restated: at every vertex each color appears either on one
/// singleton edge or on exactly two pair edges, and each pair label appears 0 or 2 times.
bool oracle_semi_coloring(const Graph& g, const std::vector<ColorLabel>& labels)
{
    const auto delta = g.max_degree();
    for (const auto& l : labels) {
        if (l.first < 1 || l.first > delta || (l.second != 0 && (l.second <= l.first || l.second > delta)))
            return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::map<unsigned, int> singles, in_pairs;
        std::map<std::pair<unsigned, unsigned>, int> pairs;
        for (auto e : g.incident(v)) {
            const auto& l = labels[e];
            if (l.second == 0) {
                ++singles[l.first];
            } else {
                ++in_pairs[l.first];
                ++in_pairs[l.second];
                ++pairs[{l.first, l.second}];
            }
        }
        for (auto [c, n] : singles)
            if (n != 1 || in_pairs.count(c))
                return false;
        for (auto [c, n] : in_pairs)
            if (n != 2)
                return false;
        for (auto [p, n] : pairs)
            if (n != 2)
                return false;
    }
    return true;
}

std::vector<ColorLabel> all_labels(unsigned delta)
{
    std::vector<ColorLabel> out;
    for (unsigned a = 1; a <= delta; ++a)
        out.push_back({a, 0});
    for (unsigned a = 1; a <= delta; ++a)
        for (unsigned b = a + 1; b <= delta; ++b)
            out.push_back({a, b});
    return out;
}

} // namespace

TEST(SemiColoring, CheckerMatchesRestatedConditions)
{
    support::Rng rng(81);
    int valid = 0;
    for (int round = 0; round < 3000; ++round) {
        const auto g = support::random_connected_graph(support::uniform(rng, 2, 6), 8, 4, rng);
        const auto choices = all_labels(static_cast<unsigned>(g.max_degree()));
        SemiColoring sc;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            sc.labels.push_back(choices[support::uniform(rng, 0, choices.size() - 1)]);
        const bool expect = oracle_semi_coloring(g, sc.labels);
        valid += expect;
        EXPECT_EQ(is_semi_coloring(g, sc), expect);
    }
    EXPECT_GT(valid, 10);
}

TEST(SemiColoring, FoundForAllSmallConnectedGraphs)
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& g : support::connected_graphs(n)) {
            const auto sc = find_semi_coloring(g);
            ASSERT_TRUE(sc) << serialize_graph(g, GraphFormat::EdgeList);
            EXPECT_TRUE(oracle_semi_coloring(g, sc->labels));
            const auto parts = extract_locally_regular_parts(g, *sc);
            EXPECT_LE(parts.size(), g.max_degree());
            EXPECT_TRUE(verify_partition(g, parts, PartPredicate::locally_regular()));
        }
}

TEST(SemiColoring, SmallGraphEnumerationCounts)
{
    const std::vector<std::size_t> expected{1, 2, 6, 21, 112};
    for (std::size_t n = 2; n <= 6; ++n)
        EXPECT_EQ(support::connected_graphs(n).size(), expected[n - 2]) << n;
}

TEST(SemiColoring, ExtractionRejectsInvalidLabels)
{
    const Graph p3(3, {{0, 1}, {1, 2}});
    EXPECT_THROW(extract_locally_regular_parts(p3, SemiColoring{{{1, 0}, {1, 0}}}), PreconditionError);
    const auto parts = extract_locally_regular_parts(p3, SemiColoring{{{1, 0}, {2, 0}}});
    EXPECT_EQ(parts.size(), 2u);
    EXPECT_THROW(find_semi_coloring(Graph(2, {})), PreconditionError);
}

TEST(SemiColoring, OddCycleUsesPairs)
{
    const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto sc = find_semi_coloring(c5);
    ASSERT_TRUE(sc);
    const auto parts = extract_locally_regular_parts(c5, *sc);
    EXPECT_LE(parts.size(), 2u);
}
