#ifndef EDGEDECOMP_K_IRREGULAR_HPP
#define EDGEDECOMP_K_IRREGULAR_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/predicates.hpp"

namespace edgedecomp {

struct KIrrConditionsReport {
    /// No edge joins two vertices of degree < k+1.
    bool condition_a = true;
    /// No edge joins two vertices of degree k+1.
    bool condition_b = true;
    /// Every neighbor of a degree-(k+1) vertex has degree at most 2.
    bool condition_c = true;
    std::optional<EdgeIndex> violating_edge;

    [[nodiscard]] bool all() const noexcept { return condition_a && condition_b && condition_c; }
};

inline KIrrConditionsReport k_irregular_conditions(const Graph& g, unsigned k)
{
    if (k < 1)
        throw PreconditionError("k must be positive");
    if (g.max_degree() != k + 1)
        throw PreconditionError("maximum degree must equal k+1");
    const std::size_t hub = k + 1;
    KIrrConditionsReport r;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto du = g.degree(g.edge(e).u), dv = g.degree(g.edge(e).v);
        bool bad = false;
        if (du < hub && dv < hub) {
            r.condition_a = false;
            bad = true;
        }
        if (du == hub && dv == hub) {
            r.condition_b = false;
            bad = true;
        }
        if ((du == hub && dv > 2) || (dv == hub && du > 2)) {
            r.condition_c = false;
            bad = true;
        }
        if (bad && !r.violating_edge)
            r.violating_edge = e;
    }
    return r;
}

/// Two locally k-irregular parts for a connected graph of maximum degree k+1, or absent.
/// Every edge follows the color of its degree-(k+1) endpoint in a 2-coloring of the hub
/// graph (hubs adjacent when they share a degree-2 neighbor).
inline std::optional<EdgePartition> k_irregular_two_parts(const Graph& g, unsigned k)
{
    if (g.edge_count() == 0)
        throw PreconditionError("graph must have at least one edge");
    if (!is_connected(g))
        throw PreconditionError("graph must be connected");
    const auto report = k_irregular_conditions(g, k);
    if (!report.all())
        return std::nullopt;

    const std::size_t hub = k + 1;
    std::vector<Vertex> hubs;
    std::vector<Vertex> hub_index(g.vertex_count(), static_cast<Vertex>(-1));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == hub) {
            hub_index[v] = static_cast<Vertex>(hubs.size());
            hubs.push_back(v);
        }
    if (hubs.size() < 2)
        return std::nullopt;
    std::vector<Edge> star_edges;
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (g.degree(z) != 2 || hub_index[z] != static_cast<Vertex>(-1))
            continue;
        const auto nb = g.neighbors(z);
        star_edges.push_back({hub_index[nb[0]], hub_index[nb[1]]});
    }
    std::vector<Edge> simple;
    for (Edge e : star_edges) {
        if (e.u == e.v)
            return std::nullopt;
        e = e.normalized();
        if (std::ranges::find(simple, e) == simple.end())
            simple.push_back(e);
    }
    const Graph star(hubs.size(), std::move(simple));
    const auto color = two_coloring(star);
    if (!color)
        return std::nullopt;

    std::vector<std::size_t> part(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const bool hu = hub_index[ed.u] != static_cast<Vertex>(-1);
        const bool hv = hub_index[ed.v] != static_cast<Vertex>(-1);
        if (hu == hv)
            throw std::logic_error("k_irregular_two_parts: edge without exactly one hub endpoint");
        part[e] = static_cast<std::size_t>((*color)[hub_index[hu ? ed.u : ed.v]]);
    }
    auto out = partition_from_labels(part, 2);
    if (out.size() != 2 || !verify_partition(g, out, PartPredicate::locally_k_irregular(k)))
        throw std::logic_error("k_irregular_two_parts: constructed parts do not verify");
    return out;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_K_IRREGULAR_HPP
