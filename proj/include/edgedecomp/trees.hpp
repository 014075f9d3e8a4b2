#ifndef EDGEDECOMP_TREES_HPP
#define EDGEDECOMP_TREES_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/predicates.hpp"

namespace edgedecomp {

/// A partition together with the predicate each part satisfies.
struct LabeledPartition {
    EdgePartition partition;
    std::vector<PartPredicate> predicates;

    [[nodiscard]] bool verify(const Graph& g) const { return verify_partition(g, partition, predicates); }
};

namespace detail {

inline void require_tree(const Graph& g)
{
    if (g.edge_count() == 0)
        throw PreconditionError("tree must have at least one edge");
    if (!is_tree(g))
        throw PreconditionError("input is not a tree");
}

/// Tree edges in breadth-first order from `root`, each oriented parent -> child.
inline std::vector<EdgeIndex> bfs_edge_order(const Graph& g, Vertex root, std::vector<Vertex>& parent)
{
    parent.assign(g.vertex_count(), root);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<EdgeIndex> order;
    std::queue<Vertex> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (EdgeIndex e : g.incident(u)) {
            const Vertex v = g.edge(e).other(u);
            if (seen[v])
                continue;
            seen[v] = true;
            parent[v] = u;
            order.push_back(e);
            q.push(v);
        }
    }
    return order;
}

inline Vertex first_non_isolated(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            return v;
    return 0;
}

} // namespace detail

/// A matching R and a part P whose components are single edges or locally irregular.
struct MatchingPlusSplit {
    EdgeSubset matching;
    EdgeSubset rest;

    /// [matching, rest] with empty parts dropped.
    [[nodiscard]] LabeledPartition labeled() const
    {
        LabeledPartition out;
        if (!matching.empty()) {
            out.partition.parts.push_back(matching);
            out.predicates.push_back(PartPredicate::matching());
        }
        if (!rest.empty()) {
            out.partition.parts.push_back(rest);
            out.predicates.push_back(PartPredicate::componentwise_regular_or_locally_irregular());
        }
        return out;
    }
};

inline MatchingPlusSplit tree_matching_plus(const Graph& t)
{
    detail::require_tree(t);
    std::vector<Vertex> parent;
    const Vertex root = detail::first_non_isolated(t);
    const auto order = detail::bfs_edge_order(t, root, parent);

    std::vector<bool> in_r(t.edge_count(), false), in_p(t.edge_count(), false);
    std::vector<std::uint32_t> deg_p(t.vertex_count(), 0);
    std::vector<std::uint32_t> deg_r(t.vertex_count(), 0);
    auto add_p = [&](EdgeIndex e, int delta) {
        in_p[e] = delta > 0;
        deg_p[t.edge(e).u] += delta;
        deg_p[t.edge(e).v] += delta;
    };
    auto add_r = [&](EdgeIndex e, int delta) {
        in_r[e] = delta > 0;
        deg_r[t.edge(e).u] += delta;
        deg_r[t.edge(e).v] += delta;
    };
    // every P-edge is an isolated edge or has distinct endpoint degrees
    auto p_ok_around = [&](std::initializer_list<Vertex> touched) {
        for (Vertex x : touched)
            for (EdgeIndex f : t.incident(x)) {
                if (!in_p[f])
                    continue;
                const auto a = deg_p[t.edge(f).u], b = deg_p[t.edge(f).v];
                if (a == b && a != 1)
                    return false;
            }
        return true;
    };

    add_p(order.front(), 1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const EdgeIndex uv = order[i];
        const Vertex v = t.edge(uv).u == parent[t.edge(uv).v] ? t.edge(uv).v : t.edge(uv).u;
        const Vertex u = parent[v];
        if (deg_r[u] == 0) {
            add_r(uv, 1);
            continue;
        }
        EdgeIndex e = uv;
        for (EdgeIndex f : t.incident(u))
            if (in_r[f])
                e = f;
        const bool parent_edge_in_r = u != root && t.edge(e).other(u) == parent[u];
        add_p(uv, 1);
        if (parent_edge_in_r)
            continue;
        const Vertex x = t.edge(e).other(u);
        if (p_ok_around({u, v, x}))
            continue;
        add_r(e, -1);
        add_p(e, 1);
        if (!p_ok_around({u, v, x}))
            throw std::logic_error("tree_matching_plus: no valid extension");
    }

    std::vector<EdgeIndex> r, p;
    for (EdgeIndex e = 0; e < t.edge_count(); ++e)
        (in_r[e] ? r : p).push_back(e);
    return {EdgeSubset(std::move(r)), EdgeSubset(std::move(p))};
}

/// Two matchings and a locally irregular part, empty parts dropped. A locally irregular
/// tree is returned whole.
inline LabeledPartition tree_two_matchings_irregular(const Graph& t)
{
    detail::require_tree(t);
    const auto all = t.all_edges();
    if (satisfies(t, all, PartPredicate::locally_irregular()))
        return {EdgePartition{{all}}, {PartPredicate::locally_irregular()}};

    const auto split = tree_matching_plus(t);
    std::vector<EdgeIndex> singles, irregular;
    if (!split.rest.empty()) {
        for (const auto& comp : components(t, split.rest)) {
            auto& dst = comp.size() == 1 ? singles : irregular;
            dst.insert(dst.end(), comp.begin(), comp.end());
        }
    }
    LabeledPartition out;
    auto push = [&](EdgeSubset s, PartPredicate p) {
        if (s.empty())
            return;
        out.partition.parts.push_back(std::move(s));
        out.predicates.push_back(p);
    };
    push(split.matching, PartPredicate::matching());
    push(EdgeSubset(std::move(singles)), PartPredicate::matching());
    push(EdgeSubset(std::move(irregular)), PartPredicate::locally_irregular());
    return out;
}

/// Proper edge coloring of a tree with Delta colors; each color class is a matching.
inline EdgePartition tree_delta_matchings(const Graph& t)
{
    detail::require_tree(t);
    std::vector<Vertex> parent;
    const Vertex root = detail::first_non_isolated(t);
    const auto order = detail::bfs_edge_order(t, root, parent);
    const std::size_t delta = t.max_degree();
    std::vector<std::size_t> color(t.edge_count(), delta);
    for (EdgeIndex e : order) {
        const Vertex v = t.edge(e).u == parent[t.edge(e).v] ? t.edge(e).v : t.edge(e).u;
        const Vertex u = parent[v];
        // only the edges at u are colored so far
        std::vector<bool> taken(delta, false);
        for (EdgeIndex f : t.incident(u))
            if (color[f] < delta)
                taken[color[f]] = true;
        color[e] = static_cast<std::size_t>(std::ranges::find(taken, false) - taken.begin());
    }
    return partition_from_labels(color, delta);
}

} // namespace edgedecomp

#endif // EDGEDECOMP_TREES_HPP
