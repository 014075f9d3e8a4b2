#ifndef EDGEDECOMP_SEMICOLORING_HPP
#define EDGEDECOMP_SEMICOLORING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/predicates.hpp"
#include "edgedecomp/solver.hpp"

namespace edgedecomp {

/// Color set of one edge: {first} when second == 0, else {first, second} with first < second.
struct ColorLabel {
    unsigned first = 0;
    unsigned second = 0;

    [[nodiscard]] constexpr bool is_pair() const noexcept { return second != 0; }
    [[nodiscard]] constexpr bool contains(unsigned c) const noexcept { return first == c || second == c; }
    friend constexpr bool operator==(const ColorLabel&, const ColorLabel&) = default;
};

struct SemiColoring {
    std::vector<ColorLabel> labels;
};

/// Checks both semi-coloring conditions with colors drawn from 1..Delta(g).
inline bool is_semi_coloring(const Graph& g, const SemiColoring& sc)
{
    if (sc.labels.size() != g.edge_count())
        return false;
    const auto delta = static_cast<unsigned>(g.max_degree());
    for (const auto& l : sc.labels) {
        if (l.first < 1 || l.first > delta)
            return false;
        if (l.is_pair() && (l.second <= l.first || l.second > delta))
            return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        // doubled weights: singleton counts 2, pair counts 1
        std::vector<unsigned> weight(delta + 1, 0);
        std::vector<unsigned> pair_count((delta + 1) * (delta + 1), 0);
        for (EdgeIndex e : g.incident(v)) {
            const auto& l = sc.labels[e];
            if (l.is_pair()) {
                ++weight[l.first];
                ++weight[l.second];
                ++pair_count[l.first * (delta + 1) + l.second];
            } else {
                weight[l.first] += 2;
            }
        }
        for (unsigned c = 1; c <= delta; ++c)
            if (weight[c] != 0 && weight[c] != 2)
                return false;
        for (auto n : pair_count)
            if (n != 0 && n != 2)
                return false;
    }
    return true;
}

namespace detail {

class SemiColoringSearch {
public:
    SemiColoringSearch(const Graph& g, std::uint64_t max_nodes)
        : g_(g), delta_(static_cast<unsigned>(g.max_degree())), max_nodes_(max_nodes),
          state_(g.vertex_count() * (delta_ + 1), free_slot), count_(g.vertex_count() * (delta_ + 1), 0),
          open_(g.vertex_count(), 0), rem_(g.vertex_count(), 0), labels_(g.edge_count())
    {
        for (unsigned a = 1; a <= delta_; ++a)
            choices_.push_back({a, 0});
        for (unsigned a = 1; a <= delta_; ++a)
            for (unsigned b = a + 1; b <= delta_; ++b)
                choices_.push_back({a, b});
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            rem_[v] = static_cast<unsigned>(g.degree(v));
        // breadth-first edge order keeps vertices closing early
        std::vector<bool> seen(g.edge_count(), false);
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            std::queue<Vertex> q;
            q.push(s);
            while (!q.empty()) {
                const Vertex u = q.front();
                q.pop();
                for (EdgeIndex e : g.incident(u)) {
                    if (seen[e])
                        continue;
                    seen[e] = true;
                    order_.push_back(e);
                    q.push(g.edge(e).other(u));
                }
            }
        }
    }

    std::optional<SemiColoring> run()
    {
        if (search(0))
            return SemiColoring{labels_};
        return std::nullopt;
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    static constexpr unsigned free_slot = 0;
    static constexpr unsigned single_slot = UINT32_MAX;

    unsigned& slot(Vertex v, unsigned c) { return state_[v * (delta_ + 1) + c]; }
    unsigned& cnt(Vertex v, unsigned c) { return count_[v * (delta_ + 1) + c]; }

    // slot(v, c) is free_slot, single_slot, or the partner color of an open/closed pair.
    bool can_place(Vertex v, const ColorLabel& l)
    {
        if (!l.is_pair())
            return slot(v, l.first) == free_slot;
        const auto a = slot(v, l.first), b = slot(v, l.second);
        if (a == free_slot && b == free_slot)
            return true;
        return a == l.second && b == l.first && cnt(v, l.first) == 1;
    }

    void place(Vertex v, const ColorLabel& l, int delta)
    {
        if (!l.is_pair()) {
            slot(v, l.first) = delta > 0 ? single_slot : free_slot;
            return;
        }
        if (delta > 0) {
            if (cnt(v, l.first) == 0) {
                slot(v, l.first) = l.second;
                slot(v, l.second) = l.first;
                ++open_[v];
            } else {
                --open_[v];
            }
            ++cnt(v, l.first);
        } else {
            --cnt(v, l.first);
            if (cnt(v, l.first) == 0) {
                slot(v, l.first) = free_slot;
                slot(v, l.second) = free_slot;
                --open_[v];
            } else {
                ++open_[v];
            }
        }
    }

    bool search(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const EdgeIndex e = order_[depth];
        const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
        for (const auto& l : choices_) {
            if (++nodes_ > max_nodes_)
                return false;
            if (!can_place(u, l) || !can_place(v, l))
                continue;
            place(u, l, 1);
            place(v, l, 1);
            --rem_[u];
            --rem_[v];
            labels_[e] = l;
            if (open_[u] <= rem_[u] && open_[v] <= rem_[v] && search(depth + 1))
                return true;
            ++rem_[u];
            ++rem_[v];
            place(u, l, -1);
            place(v, l, -1);
        }
        return false;
    }

    const Graph& g_;
    unsigned delta_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<unsigned> state_;
    std::vector<unsigned> count_;
    std::vector<unsigned> open_;
    std::vector<unsigned> rem_;
    std::vector<ColorLabel> labels_;
    std::vector<ColorLabel> choices_;
    std::vector<EdgeIndex> order_;
};

} // namespace detail

/// Backtracking search for a semi-coloring. Absent means the node budget ran out.
inline std::optional<SemiColoring> find_semi_coloring(const Graph& g, const SearchBudget& budget = {})
{
    if (g.edge_count() == 0)
        throw PreconditionError("graph must have at least one edge");
    auto sc = detail::SemiColoringSearch(g, budget.max_nodes).run();
    if (sc && !is_semi_coloring(g, *sc))
        throw std::logic_error("find_semi_coloring produced an invalid labeling");
    return sc;
}

/// P_i = edges labeled {i} plus edges labeled {i, j} with i < j; empty parts dropped.
inline EdgePartition extract_locally_regular_parts(const Graph& g, const SemiColoring& sc)
{
    if (!is_semi_coloring(g, sc))
        throw PreconditionError("labeling is not a semi-coloring of the graph");
    const auto delta = static_cast<std::size_t>(g.max_degree());
    std::vector<std::size_t> part(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        part[e] = sc.labels[e].first - 1;
    auto out = partition_from_labels(part, delta);
    for (const auto& p : out.parts) {
        if (!satisfies(g, p, PartPredicate::locally_regular()))
            throw std::logic_error("extracted part is not locally regular");
        for (const auto& comp : components(g, p)) {
            const auto deg = subset_degrees(g, comp);
            const bool single = comp.size() == 1;
            const bool cycle = std::ranges::all_of(deg, [](auto d) { return d == 0 || d == 2; });
            if (!single && !cycle)
                throw std::logic_error("extracted component is neither an edge nor a cycle");
        }
    }
    return out;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_SEMICOLORING_HPP
