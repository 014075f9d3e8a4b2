#ifndef EDGEDECOMP_REDUCTIONS_HPP
#define EDGEDECOMP_REDUCTIONS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgedecomp/formula.hpp"
#include "edgedecomp/gadgets.hpp"
#include "edgedecomp/graph.hpp"
#include "edgedecomp/predicates.hpp"
#include "edgedecomp/solver.hpp"

namespace edgedecomp {

struct ReductionParams {
    /// K_{alpha,alpha} size for the NAE reduction
    unsigned alpha = 3;
    /// irregularity gap for the 2-in-4 reduction
    unsigned k = 2;
};

/// Part predicates the reduction graph of `f` is decomposed into.
inline std::vector<PartPredicate> reduction_predicates(const Formula& f, const ReductionParams& params = {})
{
    switch (f.variant) {
    case FormulaVariant::OneInThreeCubic:
        return {PartPredicate::regular(), PartPredicate::locally_irregular()};
    case FormulaVariant::NaeCubic:
        return {PartPredicate::regular(), PartPredicate::regular()};
    case FormulaVariant::TwoInFour:
        return {PartPredicate::locally_k_irregular(params.k), PartPredicate::locally_k_irregular(params.k)};
    }
    return {};
}

namespace detail {

// ---------------------------------------------------------------------------------------
// 1-in-3: two 4-cycles per (variable, clause index), clause vertices, dummies, tree T(4,4,2,2)

struct OneInThreeLayout {
    Graph graph;
    std::size_t m = 0;
    // [x][i]: edges named after the endpoint on the cycles
    std::vector<std::vector<EdgeIndex>> x0_out, x1_out, x2_s, x3_r, z0_out, z1_out, z2_s, z3_r;
    std::vector<std::vector<std::optional<EdgeIndex>>> clause_edge;
    EdgeIndex tree_first = 0;
    std::size_t tree_edges = 0;
};

inline OneInThreeLayout build_one_in_three(const Formula& f)
{
    validate(f);
    const std::size_t m = f.clauses.size();
    const std::size_t n = f.variable_count;
    GraphBuilder b;
    auto grid = [&] { return std::vector<std::vector<Vertex>>(n, std::vector<Vertex>(m)); };
    std::array<std::vector<std::vector<Vertex>>, 4> xv{grid(), grid(), grid(), grid()};
    std::array<std::vector<std::vector<Vertex>>, 4> zv{grid(), grid(), grid(), grid()};
    auto sv = grid(), rv = grid();
    const std::array<std::string, 4> primes{"", "'", "''", "'''"};

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto tag = std::to_string(x + 1) + "_" + std::to_string(i);
            for (std::size_t j = 0; j < 4; ++j)
                xv[j][x][i] = b.add_vertex("x" + tag + primes[j]);
            for (std::size_t j = 0; j < 4; ++j)
                zv[j][x][i] = b.add_vertex("z" + tag + primes[j]);
            sv[x][i] = b.add_vertex("s" + tag);
            rv[x][i] = b.add_vertex("r" + tag);
        }
    }
    std::vector<Vertex> cv(m);
    for (std::size_t i = 0; i < m; ++i)
        cv[i] = b.add_vertex("c" + std::to_string(i));

    OneInThreeLayout L;
    L.m = m;
    auto egrid = [&] { return std::vector<std::vector<EdgeIndex>>(n, std::vector<EdgeIndex>(m)); };
    L.x0_out = L.x1_out = L.x2_s = L.x3_r = L.z0_out = L.z1_out = L.z2_s = L.z3_r = egrid();
    L.clause_edge.assign(n, std::vector<std::optional<EdgeIndex>>(m));

    std::vector<std::size_t> degree(b.vertex_count(), 0);
    auto edge = [&](Vertex u, Vertex v) {
        ++degree[u];
        ++degree[v];
        return b.add_edge(u, v);
    };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < 4; ++j)
                edge(xv[j][x][i], xv[(j + 1) % 4][x][i]);
            for (std::size_t j = 0; j < 4; ++j)
                edge(zv[j][x][i], zv[(j + 1) % 4][x][i]);
            L.x2_s[x][i] = edge(sv[x][i], xv[2][x][i]);
            L.z2_s[x][i] = edge(sv[x][i], zv[2][x][i]);
            L.z3_r[x][i] = edge(rv[x][i], zv[3][x][i]);
            L.x3_r[x][(i + 1) % m] = edge(rv[x][i], xv[3][x][(i + 1) % m]);
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (auto x : f.clauses[i])
            L.clause_edge[x][i] = edge(cv[i], xv[0][x][i]);

    std::vector<std::optional<EdgeIndex>> dummy(b.vertex_count());
    const std::size_t before_dummies = b.vertex_count();
    for (Vertex v = 0; v < before_dummies; ++v) {
        if (degree[v] != 2)
            continue;
        const Vertex d = b.add_vertex(b.name(v) + "~");
        dummy[v] = b.add_edge(v, d);
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < m; ++i) {
            L.x0_out[x][i] = L.clause_edge[x][i] ? *L.clause_edge[x][i] : dummy[xv[0][x][i]].value();
            L.x1_out[x][i] = dummy[xv[1][x][i]].value();
            L.z0_out[x][i] = dummy[zv[0][x][i]].value();
            L.z1_out[x][i] = dummy[zv[1][x][i]].value();
        }
    }
    L.tree_first = static_cast<EdgeIndex>(b.edge_count());
    add_two_hub_tree(b, "T.", {4, 4, 2, 2});
    L.tree_edges = b.edge_count() - L.tree_first;
    L.graph = b.build();
    return L;
}

// ---------------------------------------------------------------------------------------
// NAE: clause gadgets H / I, per-variable K_{alpha,alpha} block with vertices x and x'

struct NaeLayout {
    Graph graph;
    // variable block, x/x' edges and clause edges of each variable
    std::vector<std::vector<EdgeIndex>> variable_edges;
    std::vector<std::vector<EdgeIndex>> edges_at_x;
    std::vector<ClauseGadget> gadgets;
};

inline NaeLayout build_nae(const Formula& f, unsigned alpha)
{
    validate(f);
    if (alpha < 3)
        throw PreconditionError("nae reduction requires alpha >= 3");
    GraphBuilder b;
    NaeLayout L;
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        L.gadgets.push_back(add_clause_gadget(b, alpha, f.clauses[c].size() == 3, "C" + std::to_string(c + 1) + "."));

    const std::size_t n = f.variable_count;
    std::vector<Vertex> xv(n), xpv(n);
    L.variable_edges.resize(n);
    L.edges_at_x.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto pre = "V" + std::to_string(x + 1) + ".";
        xv[x] = b.add_vertex(pre + "x");
        xpv[x] = b.add_vertex(pre + "x'");
        const auto kx = b.add_vertices(alpha, pre + "x");
        const auto ky = b.add_vertices(alpha, pre + "y");
        auto& own = L.variable_edges[x];
        for (unsigned i = 0; i < alpha; ++i)
            for (unsigned j = 0; j < alpha; ++j)
                if (!(i == j && i + 3 < alpha))
                    own.push_back(b.add_edge(kx[i], ky[j]));
        for (unsigned i = 0; i + 3 < alpha; ++i) {
            own.push_back(b.add_edge(xv[x], kx[i]));
            L.edges_at_x[x].push_back(own.back());
        }
        for (unsigned i = 0; i + 3 < alpha; ++i)
            own.push_back(b.add_edge(xpv[x], ky[i]));
    }
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        for (auto x : f.clauses[c]) {
            L.variable_edges[x].push_back(b.add_edge(L.gadgets[c].hub, xv[x]));
            L.edges_at_x[x].push_back(L.variable_edges[x].back());
            L.variable_edges[x].push_back(b.add_edge(L.gadgets[c].hub_prime, xpv[x]));
        }
    }
    L.graph = b.build();
    return L;
}

// ---------------------------------------------------------------------------------------
// 2-in-4: gadget A per variable, gadget B per clause, main vertex -> clause vertex links

struct TwoInFourLayout {
    Graph graph;
    std::vector<AGadget> variables;
    std::vector<BGadget> clauses;
    // edge ranges [first, last) of each gadget copy
    std::vector<std::pair<EdgeIndex, EdgeIndex>> variable_range, clause_range;
    // links[c][t]: edge from the main vertex of the t-th variable of clause c to c
    std::vector<std::vector<EdgeIndex>> links;
    // main_link[x][i]: link edge at main vertex i of variable x
    std::vector<std::vector<EdgeIndex>> main_link;
};

inline TwoInFourLayout build_two_in_four(const Formula& f, unsigned k)
{
    validate(f);
    if (k < 2)
        throw PreconditionError("two-in-four reduction requires k >= 2");
    GraphBuilder b;
    TwoInFourLayout L;
    const auto occ = f.occurrences();
    for (std::size_t x = 0; x < f.variable_count; ++x) {
        const auto first = static_cast<EdgeIndex>(b.edge_count());
        L.variables.push_back(
            add_gadget_a(b, static_cast<unsigned>(occ[x]), k, "A" + std::to_string(x + 1) + "."));
        L.variable_range.emplace_back(first, static_cast<EdgeIndex>(b.edge_count()));
    }
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const auto first = static_cast<EdgeIndex>(b.edge_count());
        L.clauses.push_back(add_gadget_b(b, k, "B" + std::to_string(c + 1) + "."));
        L.clause_range.emplace_back(first, static_cast<EdgeIndex>(b.edge_count()));
    }
    std::vector<std::size_t> used(f.variable_count, 0);
    L.main_link.resize(f.variable_count);
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        L.links.emplace_back();
        for (auto x : f.clauses[c]) {
            const Vertex w = L.variables[x].main[used[x]++];
            L.links.back().push_back(b.add_edge(w, L.clauses[c].c));
            L.main_link[x].push_back(L.links.back().back());
        }
    }
    L.graph = b.build();
    return L;
}

inline void require_same_graph(const Graph& built, const Graph& g)
{
    if (!built.same_structure(g))
        throw PreconditionError("graph is not the reduction graph of this formula");
}

/// Completes one gadget copy: local graph = gadget edges plus one stub edge per boundary
/// edge. Stub parts are fixed; `check_stub` controls whether stubs are checked.
inline std::vector<std::size_t> complete_gadget(const Graph& g, EdgeIndex first, EdgeIndex last,
                                                const std::vector<std::pair<EdgeIndex, std::size_t>>& boundary,
                                                const std::vector<std::pair<EdgeIndex, std::size_t>>& pinned,
                                                bool check_stub, unsigned k)
{
    std::map<Vertex, Vertex> local;
    std::vector<Edge> edges;
    auto id = [&](Vertex v) {
        auto [it, fresh] = local.try_emplace(v, static_cast<Vertex>(local.size()));
        return it->second;
    };
    for (EdgeIndex e = first; e < last; ++e)
        edges.push_back({id(g.edge(e).u), id(g.edge(e).v)});
    const std::size_t inner = edges.size();
    // boundary edges: keep the gadget endpoint, give the far end a fresh stub vertex
    auto next = static_cast<Vertex>(local.size());
    for (auto [e, part] : boundary) {
        const Edge& ed = g.edge(e);
        const Vertex mine = local.count(ed.u) ? ed.u : ed.v;
        edges.push_back({local.at(mine), next++});
    }
    const Graph lg(next, edges);

    SearchConstraints extra;
    extra.allow_empty_parts = true;
    extra.pinned.assign(lg.edge_count(), std::nullopt);
    extra.unchecked.assign(lg.edge_count(), false);
    for (auto [e, part] : pinned)
        extra.pinned[e - first] = part;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        extra.pinned[inner + i] = boundary[i].second;
        extra.unchecked[inner + i] = !check_stub;
    }
    const std::vector<PartPredicate> preds(2, PartPredicate::locally_k_irregular(k));
    const auto out = decide_with(lg, preds, extra);
    if (!out.feasible())
        throw std::logic_error("gadget completion failed");
    return {out.part_of.begin(), out.part_of.begin() + static_cast<std::ptrdiff_t>(inner)};
}

inline std::optional<std::size_t> regular_irregular_roles(const Graph& g, const EdgePartition& p)
{
    const std::vector<PartPredicate> preds{PartPredicate::regular(), PartPredicate::locally_irregular()};
    if (p.size() != 2)
        return std::nullopt;
    if (verify_partition(g, p, preds))
        return 0;
    const EdgePartition swapped{{p.parts[1], p.parts[0]}};
    if (verify_partition(g, swapped, preds))
        return 1;
    return std::nullopt;
}

} // namespace detail

/// The reduction graph of `f`, chosen by its variant.
inline Graph reduce_to_graph(const Formula& f, const ReductionParams& params = {})
{
    switch (f.variant) {
    case FormulaVariant::OneInThreeCubic:
        return detail::build_one_in_three(f).graph;
    case FormulaVariant::NaeCubic:
        return detail::build_nae(f, params.alpha).graph;
    case FormulaVariant::TwoInFour:
        return detail::build_two_in_four(f, params.k).graph;
    }
    return {};
}

/// Decomposition of the reduction graph certified by a satisfying assignment. Parts are
/// ordered as reduction_predicates(f, params).
inline EdgePartition assignment_to_decomposition(const Formula& f, const Assignment& a, const Graph& g,
                                                 const ReductionParams& params = {})
{
    validate(f);
    if (!satisfies(f, a))
        throw PreconditionError("assignment does not satisfy the formula");
    std::vector<std::size_t> part(g.edge_count(), 1);

    switch (f.variant) {
    case FormulaVariant::OneInThreeCubic: {
        const auto L = detail::build_one_in_three(f);
        detail::require_same_graph(L.graph, g);
        for (std::size_t x = 0; x < f.variable_count; ++x) {
            for (std::size_t i = 0; i < L.m; ++i) {
                const auto& chosen = a.values[x] ? std::array{L.x0_out[x][i], L.x2_s[x][i], L.z1_out[x][i], L.z3_r[x][i]}
                                                 : std::array{L.x1_out[x][i], L.x3_r[x][i], L.z0_out[x][i], L.z2_s[x][i]};
                for (EdgeIndex e : chosen)
                    part[e] = 0;
            }
        }
        // the tree component is split by search: regular part first
        const auto tree = build_gadget(GadgetKind::tree_t1());
        const auto sol = decide(tree, {PartPredicate::regular(), PartPredicate::locally_irregular()});
        if (!sol.feasible())
            throw std::logic_error("tree component has no regular/irregular split");
        for (std::size_t e = 0; e < L.tree_edges; ++e)
            part[L.tree_first + e] = sol.part_of[e];
        break;
    }
    case FormulaVariant::NaeCubic: {
        const auto L = detail::build_nae(f, params.alpha);
        detail::require_same_graph(L.graph, g);
        for (std::size_t x = 0; x < f.variable_count; ++x)
            for (EdgeIndex e : L.variable_edges[x])
                part[e] = a.values[x] ? 0 : 1;
        for (std::size_t c = 0; c < f.clauses.size(); ++c) {
            std::size_t t = 0;
            for (auto x : f.clauses[c])
                t += a.values[x] ? 1 : 0;
            const std::size_t p = t == 1 ? 0 : 1;
            const auto& gad = L.gadgets[c];
            for (const auto* group : {&gad.k_block, &gad.s1, &gad.s1p})
                for (EdgeIndex e : *group)
                    part[e] = p;
            for (const auto* group : {&gad.kp_block, &gad.s2, &gad.s2p})
                for (EdgeIndex e : *group)
                    part[e] = 1 - p;
        }
        break;
    }
    case FormulaVariant::TwoInFour: {
        const auto L = detail::build_two_in_four(f, params.k);
        detail::require_same_graph(L.graph, g);
        std::map<std::pair<std::size_t, bool>, std::vector<std::size_t>> a_cache;
        for (std::size_t x = 0; x < f.variable_count; ++x) {
            const std::size_t main_part = a.values[x] ? 0 : 1;
            const auto& gad = L.variables[x];
            const auto key = std::pair{gad.main.size(), a.values[x]};
            auto it = a_cache.find(key);
            if (it == a_cache.end()) {
                std::vector<std::pair<EdgeIndex, std::size_t>> pins, boundary;
                for (EdgeIndex e : gad.main_edges)
                    pins.emplace_back(e, main_part);
                for (EdgeIndex e : L.main_link[x])
                    boundary.emplace_back(e, 1 - main_part);
                auto [first, last] = L.variable_range[x];
                it = a_cache
                         .emplace(key, detail::complete_gadget(g, first, last, boundary, pins, false, params.k))
                         .first;
            }
            auto [first, last] = L.variable_range[x];
            for (EdgeIndex e = first; e < last; ++e)
                part[e] = it->second[e - first];
            for (EdgeIndex e : L.main_link[x])
                part[e] = 1 - main_part;
        }
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> b_cache;
        for (std::size_t c = 0; c < f.clauses.size(); ++c) {
            std::vector<std::pair<EdgeIndex, std::size_t>> boundary;
            std::vector<std::size_t> key;
            for (EdgeIndex e : L.links[c]) {
                boundary.emplace_back(e, part[e]);
                key.push_back(part[e]);
            }
            auto it = b_cache.find(key);
            auto [first, last] = L.clause_range[c];
            if (it == b_cache.end())
                it = b_cache.emplace(key, detail::complete_gadget(g, first, last, boundary, {}, true, params.k)).first;
            for (EdgeIndex e = first; e < last; ++e)
                part[e] = it->second[e - first];
        }
        break;
    }
    }

    auto out = partition_from_labels(part, 2);
    if (out.size() != 2 || !verify_partition(g, out, reduction_predicates(f, params)))
        throw std::logic_error("reduction certificate does not verify");
    return out;
}

/// Reads a satisfying assignment back from a valid decomposition of the reduction graph.
inline Assignment decomposition_to_assignment(const Formula& f, const Graph& g, const EdgePartition& partition,
                                              const ReductionParams& params = {})
{
    validate(f);
    const auto part_of = partition.part_of_edges(g);
    if (!part_of)
        throw PreconditionError("not a partition of the graph's edges");
    Assignment a{std::vector<bool>(f.variable_count, false)};

    switch (f.variant) {
    case FormulaVariant::OneInThreeCubic: {
        const auto L = detail::build_one_in_three(f);
        detail::require_same_graph(L.graph, g);
        const auto regular = detail::regular_irregular_roles(g, partition);
        if (!regular)
            throw PreconditionError("partition is not a regular/locally irregular decomposition");
        for (std::size_t x = 0; x < f.variable_count; ++x)
            for (std::size_t i = 0; i < L.m; ++i)
                if (L.clause_edge[x][i] && (*part_of)[*L.clause_edge[x][i]] == *regular)
                    a.values[x] = true;
        break;
    }
    case FormulaVariant::NaeCubic: {
        const auto L = detail::build_nae(f, params.alpha);
        detail::require_same_graph(L.graph, g);
        if (partition.size() != 2 || !verify_partition(g, partition, reduction_predicates(f, params)))
            throw PreconditionError("partition is not a decomposition into two regular parts");
        for (std::size_t x = 0; x < f.variable_count; ++x)
            a.values[x] = std::ranges::all_of(L.edges_at_x[x], [&](EdgeIndex e) { return (*part_of)[e] == 0; });
        break;
    }
    case FormulaVariant::TwoInFour: {
        const auto L = detail::build_two_in_four(f, params.k);
        detail::require_same_graph(L.graph, g);
        if (partition.size() != 2 || !verify_partition(g, partition, reduction_predicates(f, params)))
            throw PreconditionError("partition is not a decomposition into two locally k-irregular parts");
        for (std::size_t x = 0; x < f.variable_count; ++x)
            a.values[x] = (*part_of)[L.variables[x].main_edges.front()] == 0;
        break;
    }
    }
    if (!satisfies(f, a))
        throw std::logic_error("extracted assignment does not satisfy the formula");
    return a;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_REDUCTIONS_HPP
