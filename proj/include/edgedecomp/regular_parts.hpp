#ifndef EDGEDECOMP_REGULAR_PARTS_HPP
#define EDGEDECOMP_REGULAR_PARTS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/matching.hpp"
#include "edgedecomp/predicates.hpp"

namespace edgedecomp {

namespace detail {

/// Proper 2-edge-coloring of a connected graph with maximum degree 2 (a path or an even cycle).
inline std::optional<EdgePartition> alternate_path_or_cycle(const Graph& g)
{
    if (g.edge_count() < 2)
        return std::nullopt;
    Vertex start = 0;
    while (g.degree(start) == 0)
        ++start;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    std::vector<int> color(g.edge_count(), -1);
    Vertex cur = start;
    std::optional<EdgeIndex> prev;
    int c = 0;
    for (std::size_t step = 0; step < g.edge_count(); ++step) {
        EdgeIndex next = g.edge_count();
        for (EdgeIndex f : g.incident(cur))
            if (color[f] == -1 && (!prev || f != *prev))
                next = f;
        if (next == g.edge_count())
            break;
        color[next] = c;
        c ^= 1;
        prev = next;
        cur = g.edge(next).other(cur);
    }
    std::array<std::vector<EdgeIndex>, 2> parts;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        parts[color[e]].push_back(e);
    EdgePartition p{{EdgeSubset(std::move(parts[0])), EdgeSubset(std::move(parts[1]))}};
    if (!verify_partition(g, p, PartPredicate::matching()))
        return std::nullopt;
    return p;
}

/// r1 < r2: an r1-factor F of the subgraph induced on vertices of degree r1 or r1 + r2
/// gives the split (F, E \ F).
inline std::optional<EdgePartition> factor_split(const Graph& g, std::size_t r1, std::size_t r2)
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == r1 || g.degree(v) == r1 + r2)
            keep.push_back(v);
    if (keep.empty())
        return std::nullopt;
    const auto sub = induced_subgraph(g, keep);
    std::optional<EdgeSubset> factor;
    if (r1 == 1)
        factor = perfect_matching(sub.graph);
    else
        factor = two_factor(sub.graph);
    if (!factor || factor->empty())
        return std::nullopt;
    std::vector<bool> in(g.edge_count(), false);
    for (EdgeIndex e : *factor)
        in[sub.original_edge[e]] = true;
    std::vector<EdgeIndex> a, b;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        (in[e] ? a : b).push_back(e);
    if (b.empty())
        return std::nullopt;
    EdgePartition p{{EdgeSubset(std::move(a)), EdgeSubset(std::move(b))}};
    if (!verify_partition(g, p, PartPredicate::regular()))
        return std::nullopt;
    return p;
}

inline bool degrees_within(const Graph& g, std::initializer_list<std::size_t> allowed)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0)
            continue;
        if (std::find(allowed.begin(), allowed.end(), g.degree(v)) == allowed.end())
            return false;
    }
    return true;
}

} // namespace detail

/// Splits a connected graph with maximum degree at most 5 into two regular parts, or
/// reports that no such split exists.
inline std::optional<EdgePartition> two_regular_parts_low_degree(const Graph& g)
{
    if (g.edge_count() == 0)
        throw PreconditionError("graph must have at least one edge");
    if (!is_connected(g))
        throw PreconditionError("graph must be connected");
    if (g.max_degree() > 5)
        throw PreconditionError("maximum degree must be at most 5");

    // part degrees (r1, r2); vertices have degree r1, r2 or r1 + r2
    if (detail::degrees_within(g, {1, 2}))
        if (auto p = detail::alternate_path_or_cycle(g))
            return p;
    for (auto [r1, r2] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}, {1, 4}, {2, 3}}) {
        if (!detail::degrees_within(g, {r1, r2, r1 + r2}))
            continue;
        if (auto p = detail::factor_split(g, r1, r2))
            return p;
    }
    if (detail::degrees_within(g, {2, 4}) && g.max_degree() == 4) {
        auto [a, b] = two_factorization_2_4(g);
        EdgePartition p{{std::move(a), std::move(b)}};
        if (verify_partition(g, p, PartPredicate::regular()))
            return p;
    }
    return std::nullopt;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_REGULAR_PARTS_HPP
