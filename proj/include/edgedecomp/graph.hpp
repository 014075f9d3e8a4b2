#ifndef EDGEDECOMP_GRAPH_HPP
#define EDGEDECOMP_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgedecomp {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph or subset violated a structural invariant (self-loop, bad index, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// The endpoint of this edge other than `x`.
    [[nodiscard]] constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    [[nodiscard]] constexpr Edge normalized() const noexcept { return u < v ? *this : Edge{v, u}; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph;

/// A set of edge positions into an owning Graph, kept sorted and unique.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::vector<EdgeIndex> members) : members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }
    EdgeSubset(std::initializer_list<EdgeIndex> members) : EdgeSubset(std::vector<EdgeIndex>(members)) {}

    [[nodiscard]] std::span<const EdgeIndex> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(EdgeIndex e) const noexcept
    {
        return std::binary_search(members_.begin(), members_.end(), e);
    }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    [[nodiscard]] bool valid_for(const Graph& g) const noexcept;

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

private:
    std::vector<EdgeIndex> members_;
};

/// Ordered list of edge subsets; a valid partition of G covers E(G) with
/// pairwise disjoint nonempty parts.
struct EdgePartition {
    std::vector<EdgeSubset> parts;

    [[nodiscard]] std::size_t size() const noexcept { return parts.size(); }
    [[nodiscard]] bool is_partition_of(const Graph& g) const noexcept;

    /// Part index of every edge, or nullopt when this is not a partition of `g`.
    [[nodiscard]] std::optional<std::vector<std::size_t>> part_of_edges(const Graph& g) const;

    friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

/// Undirected simple graph with optional vertex labels. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on out-of-range endpoints, self-loops or duplicate edges.
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : edges_(std::move(edges)), labels_(std::move(labels)), incidence_(vertex_count)
    {
        if (!labels_.empty() && labels_.size() != vertex_count)
            throw GraphError("label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                             std::to_string(vertex_count));
        std::vector<Edge> seen;
        seen.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (e.u >= vertex_count || e.v >= vertex_count)
                throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                                 std::to_string(vertex_count) + ")");
            if (e.u == e.v)
                throw GraphError("edge " + std::to_string(i) + " is a self-loop at vertex " + std::to_string(e.u));
            seen.push_back(e.normalized());
            incidence_[e.u].push_back(static_cast<EdgeIndex>(i));
            incidence_[e.v].push_back(static_cast<EdgeIndex>(i));
        }
        std::sort(seen.begin(), seen.end());
        auto dup = std::adjacent_find(seen.begin(), seen.end());
        if (dup != seen.end())
            throw GraphError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return incidence_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    [[nodiscard]] std::span<const EdgeIndex> incident(Vertex v) const { return incidence_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
    [[nodiscard]] std::span<const std::string> labels() const noexcept { return labels_; }
    /// Provenance label of `v`, or its decimal index when the graph is unlabeled.
    [[nodiscard]] std::string label(Vertex v) const
    {
        return labels_.empty() ? std::to_string(v) : labels_.at(v);
    }

    [[nodiscard]] std::size_t max_degree() const noexcept
    {
        std::size_t best = 0;
        for (const auto& inc : incidence_)
            best = std::max(best, inc.size());
        return best;
    }

    [[nodiscard]] std::optional<EdgeIndex> find_edge(Vertex u, Vertex v) const
    {
        if (u >= vertex_count() || v >= vertex_count())
            return std::nullopt;
        const auto& a = incidence_[u].size() <= incidence_[v].size() ? incidence_[u] : incidence_[v];
        for (EdgeIndex e : a) {
            const Edge& ed = edges_[e];
            if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u))
                return e;
        }
        return std::nullopt;
    }

    [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const
    {
        std::vector<Vertex> out;
        out.reserve(degree(v));
        for (EdgeIndex e : incident(v))
            out.push_back(edges_[e].other(v));
        return out;
    }

    [[nodiscard]] EdgeSubset all_edges() const
    {
        std::vector<EdgeIndex> all(edge_count());
        std::iota(all.begin(), all.end(), EdgeIndex{0});
        return EdgeSubset(std::move(all));
    }

    /// Sorted list of distinct vertex degrees.
    [[nodiscard]] std::vector<std::size_t> degree_set() const
    {
        std::vector<std::size_t> ds;
        for (const auto& inc : incidence_)
            ds.push_back(inc.size());
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    /// Same vertex count and edge list; labels are metadata and ignored.
    [[nodiscard]] bool same_structure(const Graph& other) const noexcept
    {
        return vertex_count() == other.vertex_count() && std::ranges::equal(edges_, other.edges_);
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

inline bool EdgeSubset::valid_for(const Graph& g) const noexcept
{
    return members_.empty() || members_.back() < g.edge_count();
}

inline std::optional<std::vector<std::size_t>> EdgePartition::part_of_edges(const Graph& g) const
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(g.edge_count(), unset);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty() || !parts[p].valid_for(g))
            return std::nullopt;
        for (EdgeIndex e : parts[p]) {
            if (owner[e] != unset)
                return std::nullopt;
            owner[e] = p;
        }
    }
    if (std::ranges::find(owner, unset) != owner.end())
        return std::nullopt;
    return owner;
}

inline bool EdgePartition::is_partition_of(const Graph& g) const noexcept
{
    return part_of_edges(g).has_value();
}

/// Builds an EdgePartition from a per-edge part index; parts that end up empty are dropped.
inline EdgePartition partition_from_labels(std::span<const std::size_t> part_of, std::size_t part_count)
{
    std::vector<std::vector<EdgeIndex>> buckets(part_count);
    for (std::size_t e = 0; e < part_of.size(); ++e)
        buckets.at(part_of[e]).push_back(static_cast<EdgeIndex>(e));
    EdgePartition out;
    for (auto& b : buckets)
        if (!b.empty())
            out.parts.emplace_back(std::move(b));
    return out;
}

inline void require_valid(const Graph& g, const EdgeSubset& s)
{
    if (!s.valid_for(g))
        throw GraphError("edge subset references an edge index outside the graph");
}

/// Degree of every vertex inside the edge-induced subgraph G[s], as a dense vector
/// (zero for vertices untouched by s).
inline std::vector<std::uint32_t> subset_degrees(const Graph& g, const EdgeSubset& s)
{
    require_valid(g, s);
    std::vector<std::uint32_t> deg(g.vertex_count(), 0);
    for (EdgeIndex e : s) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    return deg;
}

/// d_s(v) for every vertex incident to at least one edge of s. Untouched vertices are absent.
inline std::map<Vertex, std::size_t> degree_profile(const Graph& g, const EdgeSubset& s)
{
    std::map<Vertex, std::size_t> out;
    const auto deg = subset_degrees(g, s);
    for (Vertex v = 0; v < deg.size(); ++v)
        if (deg[v] > 0)
            out.emplace(v, deg[v]);
    return out;
}

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

} // namespace detail

/// Connected components of the edge-induced subgraph G[s], each as an edge subset.
/// Components are ordered by their smallest edge index.
inline std::vector<EdgeSubset> components(const Graph& g, const EdgeSubset& s)
{
    require_valid(g, s);
    detail::DisjointSets dsu(g.vertex_count());
    for (EdgeIndex e : s)
        dsu.unite(g.edge(e).u, g.edge(e).v);
    std::vector<std::vector<EdgeIndex>> groups;
    std::map<std::size_t, std::size_t> slot;
    for (EdgeIndex e : s) {
        auto root = dsu.find(g.edge(e).u);
        auto [it, inserted] = slot.emplace(root, groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(e);
    }
    std::vector<EdgeSubset> out;
    out.reserve(groups.size());
    for (auto& grp : groups)
        out.emplace_back(std::move(grp));
    return out;
}

/// True iff every vertex of g lies in one connected component (the empty graph counts).
inline bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeIndex e : g.incident(v)) {
            Vertex w = g.edge(e).other(v);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

inline bool is_tree(const Graph& g)
{
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Proper 2-coloring of g if it is bipartite.
inline std::optional<std::vector<int>> two_coloring(const Graph& g)
{
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (EdgeIndex e : g.incident(v)) {
                Vertex w = g.edge(e).other(v);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Subgraph induced by `keep` (in the given order); `original` maps new vertex ids back.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
    std::vector<EdgeIndex> original_edge;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    constexpr auto absent = static_cast<Vertex>(-1);
    std::vector<Vertex> local(g.vertex_count(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i)
        local.at(keep[i]) = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    std::vector<EdgeIndex> back;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (local[ed.u] != absent && local[ed.v] != absent) {
            edges.push_back({local[ed.u], local[ed.v]});
            back.push_back(e);
        }
    }
    return {Graph(keep.size(), std::move(edges)), std::vector<Vertex>(keep.begin(), keep.end()), std::move(back)};
}

/// Incremental construction with vertex identification ("glue x to y"), used by gadget
/// builders. Identified vertices keep the first name and record the merged ones.
class GraphBuilder {
public:
    Vertex add_vertex(std::string label)
    {
        names_.push_back(std::move(label));
        return static_cast<Vertex>(names_.size() - 1);
    }

    std::vector<Vertex> add_vertices(std::size_t count, const std::string& prefix, std::size_t first_index = 1)
    {
        std::vector<Vertex> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(add_vertex(prefix + std::to_string(first_index + i)));
        return out;
    }

    EdgeIndex add_edge(Vertex u, Vertex v)
    {
        edges_.push_back({u, v});
        return static_cast<EdgeIndex>(edges_.size() - 1);
    }

    void identify(Vertex a, Vertex b) { merges_.emplace_back(a, b); }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }

    /// Applies identifications, renumbers surviving classes in order of their first member
    /// and validates the result as a simple graph.
    [[nodiscard]] Graph build() const { return build_with_map().first; }

    /// As build(), also returning the final vertex id of every construction-time vertex.
    [[nodiscard]] std::pair<Graph, std::vector<Vertex>> build_with_map() const
    {
        detail::DisjointSets dsu(names_.size());
        for (auto [a, b] : merges_)
            dsu.unite(a, b);
        constexpr auto unset = static_cast<Vertex>(-1);
        std::vector<Vertex> class_id(names_.size(), unset);
        std::vector<Vertex> final_id(names_.size(), unset);
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < names_.size(); ++v) {
            auto root = dsu.find(v);
            if (class_id[root] == unset) {
                class_id[root] = static_cast<Vertex>(labels.size());
                labels.push_back(names_[v]);
            } else {
                labels[class_id[root]] += "=" + names_[v];
            }
            final_id[v] = class_id[root];
        }
        std::vector<Edge> edges;
        edges.reserve(edges_.size());
        for (const Edge& e : edges_)
            edges.push_back({final_id[e.u], final_id[e.v]});
        const auto n = labels.size();
        return {Graph(n, std::move(edges), std::move(labels)), std::move(final_id)};
    }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::pair<Vertex, Vertex>> merges_;
};

} // namespace edgedecomp

#endif // EDGEDECOMP_GRAPH_HPP
