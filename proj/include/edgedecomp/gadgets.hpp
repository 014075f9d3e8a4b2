#ifndef EDGEDECOMP_GADGETS_HPP
#define EDGEDECOMP_GADGETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgedecomp/graph.hpp"

namespace edgedecomp {

// ---------------------------------------------------------------------------------------
// Latin squares

struct LatinSquare {
    std::size_t order = 0;
    /// cells[i][j] in 1..order, 0-based indices.
    std::vector<std::vector<unsigned>> cells;

    [[nodiscard]] bool valid() const
    {
        if (cells.size() != order)
            return false;
        for (std::size_t i = 0; i < order; ++i) {
            if (cells[i].size() != order)
                return false;
            std::vector<bool> row(order + 1, false), col(order + 1, false);
            for (std::size_t j = 0; j < order; ++j) {
                const auto r = cells[i][j], c = cells[j][i];
                if (r < 1 || r > order || c < 1 || c > order || row[r] || col[c])
                    return false;
                row[r] = col[c] = true;
            }
        }
        return true;
    }
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Smallest prime p with 0.1k <= p <= 0.2k, if any.
inline std::optional<unsigned> window_prime(unsigned k)
{
    for (unsigned p = 2; 5 * p <= k; ++p)
        if (10 * p >= k && is_prime(p))
            return p;
    return std::nullopt;
}

inline LatinSquare latin_square_cyclic(unsigned p, unsigned r)
{
    if (!is_prime(p))
        throw PreconditionError("latin square order must be prime");
    if (r < 1 || r >= p)
        throw PreconditionError("multiplier must lie in 1..p-1");
    LatinSquare out{p, std::vector<std::vector<unsigned>>(p, std::vector<unsigned>(p))};
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j)
            out.cells[i][j] = (i + r * j) % p + 1;
    return out;
}

inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order != b.order)
        throw PreconditionError("latin squares have different orders");
    const auto n = a.order;
    std::vector<bool> seen(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto key = (a.cells[i][j] - 1) * n + (b.cells[i][j] - 1);
            if (seen[key])
                return false;
            seen[key] = true;
        }
    return true;
}

// ---------------------------------------------------------------------------------------
// Gadget kinds

enum class GadgetType {
    TreeRegIrr3,
    TreeT1,
    TreeNoMatchingIrregular,
    GadgetH,
    GadgetI,
    GadgetS,
    GadgetW,
    GadgetA,
    GadgetD,
    GadgetB,
    LowerBound2k1,
    LowerBound4k,
    MolsGraph,
};

struct GadgetKind {
    GadgetType type = GadgetType::TreeRegIrr3;
    /// alpha or k, depending on type
    unsigned a = 0;
    /// k for GadgetA, p for MolsGraph
    unsigned b = 0;

    static GadgetKind tree_reg_irr3() { return {GadgetType::TreeRegIrr3}; }
    static GadgetKind tree_t1() { return {GadgetType::TreeT1}; }
    static GadgetKind tree_no_matching_irregular(unsigned k) { return {GadgetType::TreeNoMatchingIrregular, k}; }
    static GadgetKind gadget_h(unsigned alpha) { return {GadgetType::GadgetH, alpha}; }
    static GadgetKind gadget_i(unsigned alpha) { return {GadgetType::GadgetI, alpha}; }
    static GadgetKind gadget_s() { return {GadgetType::GadgetS}; }
    static GadgetKind gadget_w() { return {GadgetType::GadgetW}; }
    static GadgetKind gadget_a(unsigned alpha, unsigned k) { return {GadgetType::GadgetA, alpha, k}; }
    static GadgetKind gadget_d(unsigned k) { return {GadgetType::GadgetD, k}; }
    static GadgetKind gadget_b(unsigned k) { return {GadgetType::GadgetB, k}; }
    static GadgetKind lower_bound_2k1(unsigned k) { return {GadgetType::LowerBound2k1, k}; }
    static GadgetKind lower_bound_4k(unsigned k) { return {GadgetType::LowerBound4k, k}; }
    static GadgetKind mols_graph(unsigned k, unsigned p) { return {GadgetType::MolsGraph, k, p}; }
};

struct GadgetNameInfo {
    std::string_view name;
    GadgetType type;
    /// parameter names in order: "k", "alpha" or "p"
    std::array<std::string_view, 2> params;
};

inline constexpr std::array<GadgetNameInfo, 13> gadget_names{{
    {"tree-regirr3", GadgetType::TreeRegIrr3, {}},
    {"tree-t1", GadgetType::TreeT1, {}},
    {"tree-no-matching-irregular", GadgetType::TreeNoMatchingIrregular, {"k"}},
    {"gadget-h", GadgetType::GadgetH, {"alpha"}},
    {"gadget-i", GadgetType::GadgetI, {"alpha"}},
    {"gadget-s", GadgetType::GadgetS, {}},
    {"gadget-w", GadgetType::GadgetW, {}},
    {"gadget-a", GadgetType::GadgetA, {"alpha", "k"}},
    {"gadget-d", GadgetType::GadgetD, {"k"}},
    {"gadget-b", GadgetType::GadgetB, {"k"}},
    {"lower-bound-2k1", GadgetType::LowerBound2k1, {"k"}},
    {"lower-bound-4k", GadgetType::LowerBound4k, {"k"}},
    {"mols", GadgetType::MolsGraph, {"k", "p"}},
}};

inline const GadgetNameInfo& gadget_info(std::string_view name)
{
    for (const auto& info : gadget_names)
        if (info.name == name)
            return info;
    throw PreconditionError("unknown gadget '" + std::string(name) + "'");
}

/// Builds a GadgetKind from its name and a lookup for named integer parameters.
template <class Lookup>
GadgetKind parse_gadget_kind(std::string_view name, Lookup&& param)
{
    const auto& info = gadget_info(name);
    GadgetKind kind{info.type};
    if (!info.params[0].empty())
        kind.a = param(info.params[0]);
    if (!info.params[1].empty())
        kind.b = param(info.params[1]);
    return kind;
}

namespace detail {

struct TwoHubTree {
    Vertex v, u;
    std::array<std::vector<Vertex>, 4> paths; // paths[i][0] is the hub
};

/// v-u edge, paths of the first two lengths hang from v, the other two from u.
inline TwoHubTree add_two_hub_tree(GraphBuilder& b, const std::string& prefix, std::array<unsigned, 4> lengths)
{
    TwoHubTree t;
    t.v = b.add_vertex(prefix + "v");
    t.u = b.add_vertex(prefix + "u");
    b.add_edge(t.v, t.u);
    for (std::size_t i = 0; i < 4; ++i) {
        Vertex prev = i < 2 ? t.v : t.u;
        t.paths[i].push_back(prev);
        for (unsigned j = 1; j <= lengths[i]; ++j) {
            const Vertex x = b.add_vertex(prefix + "P" + std::to_string(i + 1) + "_" + std::to_string(j));
            b.add_edge(prev, x);
            t.paths[i].push_back(x);
            prev = x;
        }
    }
    return t;
}

/// Vertices and edge groups of one H or I clause gadget.
struct ClauseGadget {
    Vertex hub = 0, hub_prime = 0;
    std::vector<Vertex> x, y, xp, yp;
    std::vector<EdgeIndex> k_block, kp_block;
    std::vector<EdgeIndex> s1, s2, s1p, s2p; // hub-x, hub-x', hub'-y, hub'-y'
};

/// Gadget H (identified = true) or I (identified = false) on K_{alpha,alpha} pairs.
inline ClauseGadget add_clause_gadget(GraphBuilder& b, unsigned alpha, bool identified, const std::string& prefix)
{
    ClauseGadget g;
    g.x = b.add_vertices(alpha, prefix + "x");
    g.y = b.add_vertices(alpha, prefix + "y");
    g.xp = b.add_vertices(alpha, prefix + "x'");
    g.yp = b.add_vertices(alpha, prefix + "y'");
    g.hub = b.add_vertex(prefix + (identified ? "a" : "b"));
    g.hub_prime = b.add_vertex(prefix + (identified ? "a'" : "b'"));
    if (identified)
        b.identify(g.x[alpha - 1], g.xp[alpha - 1]);
    const unsigned plain = alpha - 1;
    const unsigned primed = identified ? alpha - 2 : alpha - 1;
    // the removed perfect matching pairs x_i with y_i and x'_i with y'_i
    for (unsigned i = 0; i < alpha; ++i)
        for (unsigned j = 0; j < alpha; ++j) {
            if (!(i == j && i < plain))
                g.k_block.push_back(b.add_edge(g.x[i], g.y[j]));
            if (!(i == j && i < primed))
                g.kp_block.push_back(b.add_edge(g.xp[i], g.yp[j]));
        }
    for (unsigned i = 0; i < plain; ++i)
        g.s1.push_back(b.add_edge(g.hub, g.x[i]));
    for (unsigned i = 0; i < primed; ++i)
        g.s2.push_back(b.add_edge(g.hub, g.xp[i]));
    for (unsigned i = 0; i < plain; ++i)
        g.s1p.push_back(b.add_edge(g.hub_prime, g.y[i]));
    for (unsigned i = 0; i < primed; ++i)
        g.s2p.push_back(b.add_edge(g.hub_prime, g.yp[i]));
    return g;
}

struct SGadget {
    std::array<Vertex, 3> v, u;
};

/// C6 v1 u1 v2 u2 v3 u3 with a pendant triangle attached to each u_i.
inline SGadget add_gadget_s(GraphBuilder& b, const std::string& prefix, const std::string& v_name)
{
    SGadget s;
    for (unsigned i = 0; i < 3; ++i) {
        s.v[i] = b.add_vertex(prefix + v_name + std::to_string(i + 1));
        s.u[i] = b.add_vertex(prefix + "u" + std::to_string(i + 1));
    }
    for (unsigned i = 0; i < 3; ++i) {
        b.add_edge(s.v[i], s.u[i]);
        b.add_edge(s.u[i], s.v[(i + 1) % 3]);
    }
    for (unsigned i = 0; i < 3; ++i) {
        const auto t = b.add_vertices(3, prefix + "t" + std::to_string(i + 1) + "_");
        b.add_edge(t[0], t[1]);
        b.add_edge(t[1], t[2]);
        b.add_edge(t[2], t[0]);
        b.add_edge(s.u[i], t[0]);
    }
    return s;
}

struct AGadget {
    std::vector<Vertex> v, vp, u, up;
    std::vector<std::vector<Vertex>> w, z;
    std::vector<Vertex> main;
    std::vector<EdgeIndex> main_edges;
};

/// Cycle C_{4 alpha} with k-1 leaves on every v_i and u_i; w^i_1 are the main vertices.
inline AGadget add_gadget_a(GraphBuilder& b, unsigned alpha, unsigned k, const std::string& prefix)
{
    AGadget a;
    std::vector<Vertex> cycle;
    for (unsigned i = 1; i <= alpha; ++i) {
        const auto s = std::to_string(i);
        a.v.push_back(b.add_vertex(prefix + "v" + s));
        a.vp.push_back(b.add_vertex(prefix + "v'" + s));
        a.u.push_back(b.add_vertex(prefix + "u" + s));
        a.up.push_back(b.add_vertex(prefix + "u'" + s));
        cycle.insert(cycle.end(), {a.v.back(), a.vp.back(), a.u.back(), a.up.back()});
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        b.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (unsigned i = 0; i < alpha; ++i) {
        const auto s = std::to_string(i + 1);
        a.w.push_back(b.add_vertices(k - 1, prefix + "w" + s + "_"));
        a.z.push_back(b.add_vertices(k - 1, prefix + "z" + s + "_"));
        for (unsigned j = 0; j + 1 < k; ++j) {
            const auto e = b.add_edge(a.v[i], a.w[i][j]);
            if (j == 0) {
                a.main.push_back(a.w[i][0]);
                a.main_edges.push_back(e);
            }
        }
        for (unsigned j = 0; j + 1 < k; ++j)
            b.add_edge(a.u[i], a.z[i][j]);
    }
    return a;
}

struct DGadget {
    std::array<Vertex, 5> p;
};

/// Path p1..p5 with k-1 leaves on p2 and on p4.
inline DGadget add_gadget_d(GraphBuilder& b, unsigned k, const std::string& prefix)
{
    DGadget d;
    for (unsigned i = 0; i < 5; ++i)
        d.p[i] = b.add_vertex(prefix + "p" + std::to_string(i + 1));
    for (unsigned i = 0; i + 1 < 5; ++i)
        b.add_edge(d.p[i], d.p[i + 1]);
    for (auto [hub, name] : {std::pair{1u, "q"}, std::pair{3u, "q'"}}) {
        for (Vertex q : b.add_vertices(k - 1, prefix + name))
            b.add_edge(d.p[hub], q);
    }
    return d;
}

struct BGadget {
    Vertex c = 0;
    std::vector<DGadget> copies;
};

/// Vertex c joined to both path ends of k-1 copies of D.
inline BGadget add_gadget_b(GraphBuilder& b, unsigned k, const std::string& prefix)
{
    BGadget g;
    g.c = b.add_vertex(prefix + "c");
    for (unsigned i = 1; i < k; ++i) {
        g.copies.push_back(add_gadget_d(b, k, prefix + "D" + std::to_string(i) + "."));
        b.add_edge(g.copies.back().p[0], g.c);
        b.add_edge(g.copies.back().p[4], g.c);
    }
    return g;
}

inline void add_leaves(GraphBuilder& b, Vertex hub, std::size_t count, const std::string& prefix)
{
    for (Vertex x : b.add_vertices(count, prefix))
        b.add_edge(hub, x);
}

struct LowerBound4kGadget {
    std::array<Vertex, 3> v;
};

inline LowerBound4kGadget add_lower_bound_4k_gadget(GraphBuilder& b, unsigned k, const std::string& prefix)
{
    LowerBound4kGadget s;
    for (unsigned i = 0; i < 3; ++i)
        s.v[i] = b.add_vertex(prefix + "v" + std::to_string(i + 1));
    b.add_edge(s.v[0], s.v[1]);
    b.add_edge(s.v[1], s.v[2]);
    b.add_edge(s.v[2], s.v[0]);
    add_leaves(b, s.v[0], k - 2, prefix + "l1_");
    const auto u = b.add_vertices(2 * k - 2, prefix + "u");
    for (Vertex x : u)
        b.add_edge(s.v[1], x);
    add_leaves(b, s.v[2], 3 * k - 2, prefix + "l3_");
    for (unsigned i = 0; i + 1 < u.size(); ++i)
        add_leaves(b, u[i], k, prefix + "u" + std::to_string(i + 1) + "_");
    return s;
}

inline void require(bool ok, const char* message)
{
    if (!ok)
        throw PreconditionError(message);
}

} // namespace detail

/// Deterministic constructor for every named gadget; vertices carry construction labels.
inline Graph build_gadget(const GadgetKind& spec)
{
    using detail::require;
    GraphBuilder b;
    switch (spec.type) {
    case GadgetType::TreeRegIrr3:
        detail::add_two_hub_tree(b, "", {6, 6, 2, 2});
        break;
    case GadgetType::TreeT1:
        detail::add_two_hub_tree(b, "", {4, 4, 2, 2});
        break;
    case GadgetType::TreeNoMatchingIrregular: {
        require(spec.a > 2, "tree-no-matching-irregular requires k > 2");
        const Vertex z = b.add_vertex("z");
        for (unsigned i = 1; i <= spec.a; ++i) {
            auto t = detail::add_two_hub_tree(b, "T" + std::to_string(i) + ".", {3, 3, 3, 1});
            b.add_edge(z, t.paths[3][1]);
        }
        break;
    }
    case GadgetType::GadgetH:
    case GadgetType::GadgetI:
        require(spec.a >= 3, "clause gadgets require alpha >= 3");
        detail::add_clause_gadget(b, spec.a, spec.type == GadgetType::GadgetH, "");
        break;
    case GadgetType::GadgetS:
        detail::add_gadget_s(b, "", "v");
        break;
    case GadgetType::GadgetW:
        detail::add_gadget_s(b, "S1.", "x");
        detail::add_gadget_s(b, "S2.", "x'");
        break;
    case GadgetType::GadgetA:
        require(spec.a >= 1, "gadget-a requires alpha >= 1");
        require(spec.b >= 2, "gadget-a requires k >= 2");
        detail::add_gadget_a(b, spec.a, spec.b, "");
        break;
    case GadgetType::GadgetD:
        require(spec.a >= 2, "gadget-d requires k >= 2");
        detail::add_gadget_d(b, spec.a, "");
        break;
    case GadgetType::GadgetB:
        require(spec.a >= 2, "gadget-b requires k >= 2");
        detail::add_gadget_b(b, spec.a, "");
        break;
    case GadgetType::LowerBound2k1: {
        require(spec.a >= 1, "lower-bound-2k1 requires k >= 1");
        const unsigned k = spec.a;
        const auto v = b.add_vertices(3, "v");
        b.add_edge(v[0], v[1]);
        b.add_edge(v[1], v[2]);
        b.add_edge(v[2], v[0]);
        detail::add_leaves(b, v[0], k - 1, "l1_");
        detail::add_leaves(b, v[1], 2 * k, "l2_");
        const auto u = b.add_vertices(2 * k - 1, "u");
        for (std::size_t i = 0; i < u.size(); ++i) {
            b.add_edge(v[2], u[i]);
            detail::add_leaves(b, u[i], k, "u" + std::to_string(i + 1) + "_");
        }
        break;
    }
    case GadgetType::LowerBound4k: {
        require(spec.a >= 4, "lower-bound-4k requires k >= 4");
        std::array<Vertex, 3> z{};
        for (unsigned i = 0; i < 3; ++i)
            z[i] = b.add_vertex("z" + std::to_string(i + 1));
        for (unsigned c = 1; c <= 4 * spec.a; ++c) {
            auto s = detail::add_lower_bound_4k_gadget(b, spec.a, "S" + std::to_string(c) + ".");
            for (unsigned i = 0; i < 3; ++i)
                b.add_edge(z[i], s.v[i]);
        }
        break;
    }
    case GadgetType::MolsGraph: {
        const unsigned k = spec.a, p = spec.b;
        require(is_prime(p), "mols graph requires p prime");
        const unsigned clique = k / 2 + 1;
        require(p <= clique, "mols graph requires p <= floor(k/2) + 1");
        const unsigned half_up = (k + 1) / 2;
        // w[alpha][i][j], 0-based
        std::vector<std::vector<std::vector<Vertex>>> w(p);
        for (unsigned al = 0; al < p; ++al) {
            const auto pre = "K" + std::to_string(al + 1) + ".";
            const auto v = b.add_vertices(clique, pre + "v");
            for (unsigned i = 0; i < clique; ++i)
                for (unsigned j = i + 1; j < clique; ++j)
                    b.add_edge(v[i], v[j]);
            w[al].resize(clique);
            for (unsigned i = 0; i < clique; ++i) {
                w[al][i] = b.add_vertices(half_up + i + 1, pre + "w" + std::to_string(i + 1) + "_");
                for (Vertex leaf : w[al][i])
                    b.add_edge(v[i], leaf);
            }
        }
        for (unsigned r = 2; r <= p; ++r) {
            const auto square = latin_square_cyclic(p, r - 1);
            for (unsigned i = 0; i < p; ++i)
                for (unsigned j = 0; j < p; ++j) {
                    const unsigned a = square.cells[i][j] - 1;
                    b.identify(w[0][i][j], w[r - 1][a][j]);
                }
        }
        break;
    }
    }
    return b.build();
}

} // namespace edgedecomp

#endif // EDGEDECOMP_GADGETS_HPP
