#ifndef EDGEDECOMP_MATCHING_HPP
#define EDGEDECOMP_MATCHING_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "edgedecomp/graph.hpp"

namespace edgedecomp {

namespace detail {

/// Edmonds' blossom algorithm on an adjacency-list graph; returns mate[] (-1 if free).
class Blossom {
public:
    explicit Blossom(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(n_, -1), parent_(n_), base_(n_),
          used_(n_), blossom_(n_)
    {
    }

    std::vector<int> solve()
    {
        // greedy start
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            for (int to : adj_[v]) {
                if (match_[to] == -1) {
                    match_[to] = v;
                    match_[v] = to;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            int end = find_path(v);
            while (end != -1) {
                int pv = parent_[end], ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b)
    {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1)
                break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = 1;
        std::vector<int> q{root};
        for (std::size_t qh = 0; qh < q.size(); ++qh) {
            int v = q[qh];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1)
                        return to;
                    used_[match_[to]] = 1;
                    q.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace detail

/// Maximum-cardinality matching of a general graph.
inline EdgeSubset max_matching(const Graph& g)
{
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(static_cast<int>(e.v));
        adj[e.v].push_back(static_cast<int>(e.u));
    }
    const auto mate = detail::Blossom(std::move(adj)).solve();
    std::vector<EdgeIndex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > static_cast<int>(v))
            out.push_back(*g.find_edge(v, static_cast<Vertex>(mate[v])));
    return EdgeSubset(std::move(out));
}

inline std::optional<EdgeSubset> perfect_matching(const Graph& g)
{
    auto m = max_matching(g);
    if (2 * m.size() != g.vertex_count())
        return std::nullopt;
    return m;
}

/// Spanning 2-regular subgraph, found through Tutte's gadget and a perfect matching.
inline std::optional<EdgeSubset> two_factor(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            return std::nullopt;
    // nodes 2e, 2e+1: edge e at its u and v endpoint; then d(v)-2 core nodes per vertex
    std::size_t nodes = 2 * g.edge_count();
    std::vector<std::pair<Vertex, Vertex>> gadget;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        gadget.emplace_back(2 * e, 2 * e + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t c = 0; c + 2 < g.degree(v); ++c) {
            const auto core = static_cast<Vertex>(nodes++);
            for (EdgeIndex e : g.incident(v))
                gadget.emplace_back(core, g.edge(e).u == v ? 2 * e : 2 * e + 1);
        }
    }
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : gadget) {
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
    }
    const auto mate = detail::Blossom(std::move(adj)).solve();
    if (std::ranges::find(mate, -1) != mate.end())
        return std::nullopt;
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (mate[2 * e] == static_cast<int>(2 * e + 1))
            out.push_back(e);
    return EdgeSubset(std::move(out));
}

/// Orientation of every edge along closed trails: out[e] is true iff e is traversed
/// from edge(e).u to edge(e).v. Requires all degrees even.
inline std::vector<bool> eulerian_orientation(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("eulerian orientation requires even degrees");
    std::vector<bool> forward(g.edge_count(), false);
    std::vector<bool> used(g.edge_count(), false);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            auto inc = g.incident(v);
            while (cursor[v] < inc.size() && used[inc[cursor[v]]])
                ++cursor[v];
            if (cursor[v] == inc.size()) {
                stack.pop_back();
                continue;
            }
            const EdgeIndex e = inc[cursor[v]];
            used[e] = true;
            forward[e] = g.edge(e).u == v;
            stack.push_back(g.edge(e).other(v));
        }
    }
    return forward;
}

/// Splits a graph with all degrees in {2, 4} into two 2-regular parts such that every
/// degree-4 vertex has degree 2 in both. Components without degree-4 vertices go to
/// part 0, so part 1 may be empty.
inline std::pair<EdgeSubset, EdgeSubset> two_factorization_2_4(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2 && g.degree(v) != 4 && g.degree(v) != 0)
            throw PreconditionError("degrees must lie in {2, 4}");
    const auto forward = eulerian_orientation(g);
    auto tail = [&](EdgeIndex e) { return forward[e] ? g.edge(e).u : g.edge(e).v; };
    auto head = [&](EdgeIndex e) { return forward[e] ? g.edge(e).v : g.edge(e).u; };
    auto out_arc = [&](Vertex v, EdgeIndex except) {
        for (EdgeIndex f : g.incident(v))
            if (f != except && tail(f) == v)
                return f;
        return except;
    };

    std::vector<int> color(g.edge_count(), -1);
    // super arcs: maximal directed trails between degree-4 vertices
    struct SuperArc {
        Vertex from, to;
        std::vector<EdgeIndex> edges;
    };
    std::vector<SuperArc> arcs;
    std::vector<std::vector<std::size_t>> leaving(g.vertex_count()), entering(g.vertex_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (g.degree(tail(e)) != 4)
            continue;
        SuperArc a{tail(e), 0, {e}};
        Vertex cur = head(e);
        EdgeIndex last = e;
        while (g.degree(cur) == 2) {
            last = out_arc(cur, last);
            a.edges.push_back(last);
            cur = head(last);
        }
        a.to = cur;
        leaving[a.from].push_back(arcs.size());
        entering[a.to].push_back(arcs.size());
        arcs.push_back(std::move(a));
    }
    std::vector<int> arc_color(arcs.size(), -1);
    for (std::size_t start = 0; start < arcs.size(); ++start) {
        if (arc_color[start] != -1)
            continue;
        std::size_t cur = start;
        int c = 0;
        bool at_head = true;
        while (arc_color[cur] == -1) {
            arc_color[cur] = c;
            c ^= 1;
            const auto& pool = at_head ? entering[arcs[cur].to] : leaving[arcs[cur].from];
            cur = pool[0] == cur ? pool[1] : pool[0];
            at_head = !at_head;
        }
    }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (EdgeIndex e : arcs[i].edges)
            color[e] = arc_color[i];

    std::vector<EdgeIndex> p0, p1;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        (color[e] == 1 ? p1 : p0).push_back(e);
    return {EdgeSubset(std::move(p0)), EdgeSubset(std::move(p1))};
}

} // namespace edgedecomp

#endif // EDGEDECOMP_MATCHING_HPP
