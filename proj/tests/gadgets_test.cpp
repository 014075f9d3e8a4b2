#include <gtest/gtest.h>

#include <map>

#include "edgedecomp/gadgets.hpp"
#include "edgedecomp/solver.hpp"
#include "support/labels.hpp"

using namespace edgedecomp;

using support::vertex_named;

TEST(LatinSquares, CyclicSquaresAreValidAndOrthogonal)
{
    for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
        std::vector<LatinSquare> squares;
        for (unsigned r = 1; r < p; ++r) {
            squares.push_back(latin_square_cyclic(p, r));
            EXPECT_TRUE(squares.back().valid());
        }
        for (std::size_t a = 0; a < squares.size(); ++a)
            for (std::size_t b = a + 1; b < squares.size(); ++b)
                EXPECT_TRUE(are_orthogonal(squares[a], squares[b])) << p;
        EXPECT_FALSE(are_orthogonal(squares[0], squares[0]) && p > 1);
    }
    EXPECT_THROW(latin_square_cyclic(4, 1), PreconditionError);
    EXPECT_THROW(latin_square_cyclic(5, 5), PreconditionError);
}

TEST(LatinSquares, WindowPrime)
{
    EXPECT_FALSE(window_prime(9));
    EXPECT_EQ(window_prime(10), 2u);
    EXPECT_EQ(window_prime(20), 2u);
    EXPECT_EQ(window_prime(25), 3u);
    EXPECT_EQ(window_prime(100), 11u);
    for (unsigned k = 10; k < 500; ++k) {
        const auto p = window_prime(k);
        ASSERT_TRUE(p) << k;
        EXPECT_TRUE(is_prime(*p));
        EXPECT_LE(5 * *p, k);
        EXPECT_GE(10 * *p, k);
    }
}

TEST(Gadgets, ExtremalTreeShapes)
{
    const auto t = build_gadget(GadgetKind::tree_reg_irr3());
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(t.edge_count(), 17u);
    EXPECT_EQ(t.max_degree(), 3u);
    const auto t1 = build_gadget(GadgetKind::tree_t1());
    EXPECT_TRUE(is_tree(t1));
    EXPECT_EQ(t1.edge_count(), 13u);
    for (unsigned k = 3; k <= 6; ++k) {
        const auto big = build_gadget(GadgetKind::tree_no_matching_irregular(k));
        EXPECT_TRUE(is_tree(big));
        EXPECT_EQ(big.edge_count(), 12u * k);
        EXPECT_EQ(big.degree(vertex_named(big, "z")), k);
    }
    EXPECT_THROW(build_gadget(GadgetKind::tree_no_matching_irregular(2)), PreconditionError);
}

TEST(Gadgets, ClauseGadgetDegrees)
{
    for (unsigned alpha = 3; alpha <= 6; ++alpha) {
        const auto h = build_gadget(GadgetKind::gadget_h(alpha));
        const auto i = build_gadget(GadgetKind::gadget_i(alpha));
        const auto a = alpha;
        EXPECT_EQ(h.edge_count(), (a * a - (a - 1)) + (a * a - (a - 2)) + 2 * (a - 1) + 2 * (a - 2));
        EXPECT_EQ(i.edge_count(), 2 * (a * a - (a - 1)) + 4 * (a - 1));
        EXPECT_EQ(h.vertex_count(), 4 * a + 2 - 1);
        const auto merged = vertex_named(h, "x" + std::to_string(a));
        EXPECT_EQ(merged, vertex_named(h, "x'" + std::to_string(a)));
        EXPECT_EQ(h.degree(merged), 2 * a);
        EXPECT_EQ(h.degree(vertex_named(h, "a")), 2 * a - 3);
        EXPECT_EQ(i.degree(vertex_named(i, "b")), 2 * a - 2);
        // x_1 loses y_1 and gains the hub
        EXPECT_EQ(h.degree(vertex_named(h, "x1")), a);
        EXPECT_EQ(i.degree(vertex_named(i, "x" + std::to_string(a))), a);
    }
    EXPECT_THROW(build_gadget(GadgetKind::gadget_h(2)), PreconditionError);
}

TEST(Gadgets, SmallGadgetSizes)
{
    const auto s = build_gadget(GadgetKind::gadget_s());
    EXPECT_EQ(s.edge_count(), 18u);
    EXPECT_TRUE(is_connected(s));
    const auto w = build_gadget(GadgetKind::gadget_w());
    EXPECT_EQ(w.edge_count(), 36u);
    EXPECT_EQ(components(w, w.all_edges()).size(), 2u);
    for (unsigned k = 2; k <= 5; ++k) {
        for (unsigned alpha = 1; alpha <= 3; ++alpha) {
            const auto a = build_gadget(GadgetKind::gadget_a(alpha, k));
            EXPECT_EQ(a.edge_count(), 4 * alpha + 2 * alpha * (k - 1));
            EXPECT_EQ(a.degree(vertex_named(a, "v1")), k + 1);
        }
        const auto d = build_gadget(GadgetKind::gadget_d(k));
        EXPECT_EQ(d.edge_count(), 4 + 2 * (k - 1));
        EXPECT_TRUE(is_tree(d));
        const auto b = build_gadget(GadgetKind::gadget_b(k));
        EXPECT_EQ(b.edge_count(), (k - 1) * (4 + 2 * (k - 1) + 2));
        EXPECT_EQ(b.degree(vertex_named(b, "c")), 2 * (k - 1));
    }
    EXPECT_THROW(build_gadget(GadgetKind::gadget_d(1)), PreconditionError);
    EXPECT_THROW(build_gadget(GadgetKind::gadget_a(0, 2)), PreconditionError);
}

TEST(Gadgets, LowerBoundGraphs)
{
    for (unsigned k = 1; k <= 4; ++k) {
        const auto g = build_gadget(GadgetKind::lower_bound_2k1(k));
        EXPECT_EQ(g.edge_count(), 3 + (k - 1) + 2 * k + (2 * k - 1) * (k + 1));
        EXPECT_EQ(g.degree(vertex_named(g, "v1")), k + 1);
        EXPECT_EQ(g.degree(vertex_named(g, "v2")), 2 * k + 2);
        EXPECT_EQ(g.degree(vertex_named(g, "v3")), 2 * k + 1);
    }
    const auto g4 = build_gadget(GadgetKind::lower_bound_4k(4));
    EXPECT_EQ(g4.degree(vertex_named(g4, "z1")), 16u);
    EXPECT_TRUE(is_connected(g4));
    EXPECT_THROW(build_gadget(GadgetKind::lower_bound_4k(3)), PreconditionError);
}

TEST(Gadgets, LowerBound2k1SmallCase)
{
    // at k = 1 the graph is itself locally irregular
    const auto g = build_gadget(GadgetKind::lower_bound_2k1(1));
    EXPECT_EQ(g.edge_count(), 7u);
    EXPECT_TRUE(satisfies(g, g.all_edges(), PartPredicate::locally_irregular()));
}

TEST(Gadgets, MolsGraphMergesLeaves)
{
    const auto g = build_gadget(GadgetKind::mols_graph(4, 3));
    // three copies of K_3 with 3, 4, 5 leaves; 9 leaf classes of size 3 after merging
    const std::size_t per_copy = 3 + 3 + 4 + 5;
    EXPECT_EQ(g.edge_count(), 3 * per_copy);
    EXPECT_EQ(g.vertex_count(), 3 * (3 + 12) - 2 * 9);
    EXPECT_THROW(build_gadget(GadgetKind::mols_graph(4, 4)), PreconditionError);
    EXPECT_THROW(build_gadget(GadgetKind::mols_graph(3, 3)), PreconditionError);
}

TEST(Gadgets, NamesAndParameters)
{
    EXPECT_EQ(gadget_names.size(), 13u);
    std::map<std::string_view, unsigned> params{{"k", 5}, {"p", 3}, {"alpha", 4}};
    auto lookup = [&](std::string_view n) { return params.at(n); };
    const auto mols = parse_gadget_kind("mols", lookup);
    EXPECT_EQ(mols.type, GadgetType::MolsGraph);
    EXPECT_EQ(mols.a, 5u);
    EXPECT_EQ(mols.b, 3u);
    const auto a = parse_gadget_kind("gadget-a", lookup);
    EXPECT_EQ(a.a, 4u);
    EXPECT_EQ(a.b, 5u);
    EXPECT_THROW(gadget_info("gadget-z"), PreconditionError);
    for (const auto& info : gadget_names)
        EXPECT_NO_THROW(build_gadget(parse_gadget_kind(info.name, [](std::string_view n) {
            return n == "alpha" ? 3u : n == "p" ? 2u : 4u;
        })));
}
