#ifndef EDGEDECOMP_SOLVER_HPP
#define EDGEDECOMP_SOLVER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/predicates.hpp"

namespace edgedecomp {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    /// Sequential, bit-reproducible search. When false and jobs > 1 the top of the
    /// search tree is explored by several threads.
    bool deterministic = true;
    unsigned jobs = 1;
};

enum class SolveStatus { Feasible, Infeasible, BudgetExhausted };

inline const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Feasible:
        return "feasible";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::BudgetExhausted:
        return "budget-exhausted";
    }
    return "?";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    /// Set iff status == Feasible. Empty parts are dropped from the witness.
    std::optional<EdgePartition> witness;
    /// Part index of every edge for a feasible outcome (indices survive empty parts).
    std::vector<std::size_t> part_of;
    std::uint64_t nodes = 0;

    [[nodiscard]] bool feasible() const noexcept { return status == SolveStatus::Feasible; }
};

/// Extra side conditions for decide_with: edges pinned to a part, edges whose own
/// predicate check is skipped (they still count toward degrees), and whether parts may
/// stay empty. Used for completing partial decompositions of a subgraph.
struct SearchConstraints {
    std::vector<std::optional<std::size_t>> pinned;
    std::vector<bool> unchecked;
    bool allow_empty_parts = false;
};

namespace detail {

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, std::span<const PartPredicate> preds, const SearchConstraints& extra)
        : g_(g), preds_(preds.begin(), preds.end()), parts_(preds.size()), n_(g.vertex_count()),
          part_of_(g.edge_count(), -1), deg_(parts_ * n_, 0), rem_(n_, 0), size_(parts_, 0),
          unchecked_(g.edge_count(), false), allow_empty_(extra.allow_empty_parts)
    {
        if (!extra.pinned.empty() && extra.pinned.size() != g.edge_count())
            throw PreconditionError("pinned vector must have one entry per edge");
        if (!extra.unchecked.empty() && extra.unchecked.size() != g.edge_count())
            throw PreconditionError("unchecked vector must have one entry per edge");
        if (!extra.unchecked.empty())
            unchecked_ = extra.unchecked;
        for (const auto& p : preds_) {
            if (p.kind() == PredicateKind::ComponentwiseRegularOrLocallyIrregular &&
                std::ranges::find(unchecked_, true) != unchecked_.end())
                throw PreconditionError("componentwise predicates cannot be combined with unchecked edges");
        }
        for (Vertex v = 0; v < n_; ++v)
            rem_[v] = static_cast<std::uint32_t>(g.degree(v));

        bool any_pinned = false;
        std::vector<EdgeIndex> free_edges;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            if (!extra.pinned.empty() && extra.pinned[e]) {
                if (*extra.pinned[e] >= parts_)
                    throw PreconditionError("edge pinned to a part index beyond the predicate list");
                assign(e, *extra.pinned[e]);
                any_pinned = true;
            } else {
                free_edges.push_back(e);
            }
        }
        // Fixed order: descending by larger endpoint degree, ties by index.
        std::ranges::stable_sort(free_edges, [&](EdgeIndex a, EdgeIndex b) {
            auto key = [&](EdgeIndex e) { return std::max(g.degree(g.edge(e).u), g.degree(g.edge(e).v)); };
            return key(a) > key(b);
        });
        order_ = std::move(free_edges);
        symmetric_ = !any_pinned && std::ranges::all_of(preds_, [&](const auto& p) { return p == preds_.front(); });
        pins_consistent_ = true;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (part_of_[e] >= 0 && !consistent_after(e))
                pins_consistent_ = false;
    }

    [[nodiscard]] std::span<const EdgeIndex> order() const noexcept { return order_; }

    void set_shared(std::atomic<std::uint64_t>* nodes, std::atomic<bool>* stop, std::uint64_t max_nodes)
    {
        shared_nodes_ = nodes;
        stop_ = stop;
        max_nodes_ = max_nodes;
    }

    /// Applies a prefix of decisions (part index per order_ position). Returns false if it
    /// is inconsistent.
    bool replay(std::span<const std::size_t> prefix)
    {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            assign(order_[i], prefix[i]);
            if (!consistent_after(order_[i]))
                return false;
        }
        return true;
    }

    enum class Result { Found, Exhausted, Aborted };

    Result run(std::size_t depth)
    {
        if (!pins_consistent_)
            return Result::Exhausted;
        return search(depth);
    }

    /// Enumerates consistent decision prefixes of the given length (for parallel splitting).
    void frontier(std::size_t depth, std::size_t target, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out)
    {
        if (depth == target || depth == order_.size()) {
            out.push_back(prefix);
            return;
        }
        const EdgeIndex e = order_[depth];
        for (std::size_t p = 0; p < candidate_limit(); ++p) {
            assign(e, p);
            if (consistent_after(e) && !empty_parts_unreachable(depth + 1)) {
                prefix.push_back(p);
                frontier(depth + 1, target, prefix, out);
                prefix.pop_back();
            }
            unassign(e, p);
        }
    }

    [[nodiscard]] std::vector<std::size_t> assignment() const
    {
        std::vector<std::size_t> out(part_of_.size());
        for (std::size_t e = 0; e < out.size(); ++e)
            out[e] = static_cast<std::size_t>(part_of_[e]);
        return out;
    }

    [[nodiscard]] bool pins_consistent() const noexcept { return pins_consistent_; }

private:
    void assign(EdgeIndex e, std::size_t p)
    {
        const Edge& ed = g_.edge(e);
        part_of_[e] = static_cast<int>(p);
        ++deg_[p * n_ + ed.u];
        ++deg_[p * n_ + ed.v];
        --rem_[ed.u];
        --rem_[ed.v];
        ++size_[p];
    }

    void unassign(EdgeIndex e, std::size_t p)
    {
        const Edge& ed = g_.edge(e);
        part_of_[e] = -1;
        --deg_[p * n_ + ed.u];
        --deg_[p * n_ + ed.v];
        ++rem_[ed.u];
        ++rem_[ed.v];
        --size_[p];
    }

    [[nodiscard]] std::uint32_t d(std::size_t p, Vertex v) const { return deg_[p * n_ + v]; }

    [[nodiscard]] bool gap_possible(std::size_t p, Vertex a, Vertex b, std::int64_t gap) const
    {
        const std::int64_t lo_a = d(p, a), hi_a = lo_a + rem_[a];
        const std::int64_t lo_b = d(p, b), hi_b = lo_b + rem_[b];
        return std::max(hi_a - lo_b, hi_b - lo_a) >= gap;
    }

    [[nodiscard]] bool equal_possible(std::size_t p, Vertex a, Vertex b) const
    {
        const std::uint32_t lo_a = d(p, a), hi_a = lo_a + rem_[a];
        const std::uint32_t lo_b = d(p, b), hi_b = lo_b + rem_[b];
        return std::max(lo_a, lo_b) <= std::min(hi_a, hi_b);
    }

    /// Necessary condition on one assigned edge given current degree intervals
    /// [deg, deg + unassigned incident edges] of its endpoints.
    [[nodiscard]] bool edge_ok(EdgeIndex f) const
    {
        const auto p = static_cast<std::size_t>(part_of_[f]);
        const Edge& ed = g_.edge(f);
        switch (preds_[p].kind()) {
        case PredicateKind::Regular:
        case PredicateKind::LocallyRegular:
            return equal_possible(p, ed.u, ed.v);
        case PredicateKind::LocallyIrregular:
            return gap_possible(p, ed.u, ed.v, 1);
        case PredicateKind::LocallyKIrregular:
            return gap_possible(p, ed.u, ed.v, preds_[p].k());
        case PredicateKind::Matching:
            return d(p, ed.u) <= 1 && d(p, ed.v) <= 1;
        case PredicateKind::RegularOrLocallyIrregular:
        case PredicateKind::ComponentwiseRegularOrLocallyIrregular:
            return true;
        }
        return true;
    }

    [[nodiscard]] bool common_degree_possible(std::size_t p) const
    {
        std::uint32_t lo = 0, hi = UINT32_MAX;
        for (Vertex v = 0; v < n_; ++v) {
            const auto dv = d(p, v);
            if (dv == 0)
                continue;
            lo = std::max(lo, dv);
            hi = std::min(hi, dv + rem_[v]);
            if (lo > hi)
                return false;
        }
        return true;
    }

    [[nodiscard]] bool part_ok(std::size_t p) const
    {
        switch (preds_[p].kind()) {
        case PredicateKind::Regular:
            return common_degree_possible(p);
        case PredicateKind::RegularOrLocallyIrregular: {
            if (common_degree_possible(p))
                return true;
            for (EdgeIndex f = 0; f < part_of_.size(); ++f)
                if (part_of_[f] == static_cast<int>(p) && !unchecked_[f] &&
                    !gap_possible(p, g_.edge(f).u, g_.edge(f).v, 1))
                    return false;
            return true;
        }
        default:
            return true;
        }
    }

    [[nodiscard]] bool consistent_after(EdgeIndex e) const
    {
        const Edge& ed = g_.edge(e);
        for (Vertex x : {ed.u, ed.v}) {
            for (EdgeIndex f : g_.incident(x))
                if (part_of_[f] >= 0 && !unchecked_[f] && !edge_ok(f))
                    return false;
        }
        for (std::size_t p = 0; p < parts_; ++p) {
            const auto kind = preds_[p].kind();
            if (kind != PredicateKind::Regular && kind != PredicateKind::RegularOrLocallyIrregular)
                continue;
            if ((d(p, ed.u) > 0 || d(p, ed.v) > 0) && !part_ok(p))
                return false;
        }
        return true;
    }

    [[nodiscard]] bool empty_parts_unreachable(std::size_t depth) const
    {
        if (allow_empty_)
            return false;
        std::size_t empty = 0;
        for (auto s : size_)
            empty += (s == 0);
        return empty > order_.size() - depth;
    }

    [[nodiscard]] bool leaf_ok() const
    {
        for (std::size_t p = 0; p < parts_; ++p) {
            if (size_[p] == 0) {
                if (!allow_empty_)
                    return false;
                continue;
            }
            if (preds_[p].kind() == PredicateKind::ComponentwiseRegularOrLocallyIrregular) {
                std::vector<EdgeIndex> members;
                for (EdgeIndex f = 0; f < part_of_.size(); ++f)
                    if (part_of_[f] == static_cast<int>(p))
                        members.push_back(f);
                if (!detail::satisfies_nonempty(g_, EdgeSubset(std::move(members)), preds_[p]))
                    return false;
            }
        }
        return true;
    }

    [[nodiscard]] std::size_t candidate_limit() const
    {
        if (!symmetric_)
            return parts_;
        std::size_t used = 0;
        while (used < parts_ && size_[used] > 0)
            ++used;
        return std::min(parts_, used + 1);
    }

    bool tick()
    {
        if (stop_ && stop_->load(std::memory_order_relaxed))
            return false;
        const auto n = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
        return n <= max_nodes_;
    }

    Result search(std::size_t depth)
    {
        if (depth == order_.size())
            return leaf_ok() ? Result::Found : Result::Exhausted;
        const EdgeIndex e = order_[depth];
        const std::size_t limit = candidate_limit();
        for (std::size_t p = 0; p < limit; ++p) {
            if (!tick())
                return Result::Aborted;
            assign(e, p);
            if (consistent_after(e) && !empty_parts_unreachable(depth + 1)) {
                auto r = search(depth + 1);
                if (r != Result::Exhausted)
                    return r; // keep the assignment in place on success
            }
            unassign(e, p);
        }
        return Result::Exhausted;
    }

    const Graph& g_;
    std::vector<PartPredicate> preds_;
    std::size_t parts_;
    std::size_t n_;
    std::vector<int> part_of_;
    std::vector<std::uint32_t> deg_;
    std::vector<std::uint32_t> rem_;
    std::vector<std::size_t> size_;
    std::vector<bool> unchecked_;
    std::vector<EdgeIndex> order_;
    bool allow_empty_;
    bool symmetric_ = false;
    bool pins_consistent_ = true;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
    std::atomic<bool>* stop_ = nullptr;
    std::uint64_t max_nodes_ = 0;
};

inline SolveOutcome finish_found(const Graph& g, std::vector<std::size_t> part_of, std::size_t parts,
                                 std::uint64_t nodes)
{
    SolveOutcome out;
    out.status = SolveStatus::Feasible;
    out.witness = partition_from_labels(part_of, parts);
    out.part_of = std::move(part_of);
    out.nodes = nodes;
    (void)g;
    return out;
}

inline SolveOutcome run_parallel(const Graph& g, std::span<const PartPredicate> preds, const SearchConstraints& extra,
                                 const SearchBudget& budget)
{
    PartitionSearch root(g, preds, extra);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    root.set_shared(&nodes, &stop, budget.max_nodes);
    if (!root.pins_consistent())
        return {SolveStatus::Infeasible, std::nullopt, {}, 0};

    std::vector<std::vector<std::size_t>> prefixes;
    std::vector<std::size_t> scratch;
    std::size_t depth = 1;
    while (depth <= root.order().size()) {
        prefixes.clear();
        root.frontier(0, depth, scratch, prefixes);
        if (prefixes.size() >= 4 * budget.jobs || prefixes.empty() || depth == root.order().size())
            break;
        ++depth;
    }
    if (prefixes.empty())
        return {SolveStatus::Infeasible, std::nullopt, {}, 0};

    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    std::mutex result_mutex;
    std::optional<std::vector<std::size_t>> found;
    auto worker = [&] {
        while (!stop.load()) {
            const auto i = next.fetch_add(1);
            if (i >= prefixes.size())
                return;
            PartitionSearch local(g, preds, extra);
            local.set_shared(&nodes, &stop, budget.max_nodes);
            if (!local.replay(prefixes[i]))
                continue;
            auto r = local.run(prefixes[i].size());
            if (r == PartitionSearch::Result::Found) {
                std::lock_guard lock(result_mutex);
                if (!found)
                    found = local.assignment();
                stop.store(true);
                return;
            }
            if (r == PartitionSearch::Result::Aborted && !stop.load()) {
                aborted.store(true);
                stop.store(true);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < budget.jobs; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (found)
        return finish_found(g, std::move(*found), preds.size(), nodes.load());
    if (aborted.load())
        return {SolveStatus::BudgetExhausted, std::nullopt, {}, nodes.load()};
    return {SolveStatus::Infeasible, std::nullopt, {}, nodes.load()};
}

} // namespace detail

/// Exhaustive branch-and-bound search for a partition of E(g) into |preds| parts with
/// part i satisfying preds[i], subject to `extra`. Infeasible is only reported after the
/// whole search space has been ruled out.
inline SolveOutcome decide_with(const Graph& g, std::span<const PartPredicate> preds, const SearchConstraints& extra,
                                const SearchBudget& budget = {})
{
    if (preds.empty())
        throw PreconditionError("at least one part predicate is required");
    if (budget.max_nodes < 1)
        throw PreconditionError("search budget must allow at least one node");
    if (!budget.deterministic && budget.jobs > 1)
        return detail::run_parallel(g, preds, extra, budget);

    detail::PartitionSearch search(g, preds, extra);
    std::atomic<std::uint64_t> nodes{0};
    search.set_shared(&nodes, nullptr, budget.max_nodes);
    switch (search.run(0)) {
    case detail::PartitionSearch::Result::Found:
        return detail::finish_found(g, search.assignment(), preds.size(), nodes.load());
    case detail::PartitionSearch::Result::Aborted:
        return {SolveStatus::BudgetExhausted, std::nullopt, {}, nodes.load()};
    case detail::PartitionSearch::Result::Exhausted:
        break;
    }
    return {SolveStatus::Infeasible, std::nullopt, {}, nodes.load()};
}

/// Decides whether E(g) splits into |preds| nonempty parts, part i satisfying preds[i].
/// Feasible witnesses are re-verified before they are returned.
inline SolveOutcome decide(const Graph& g, std::span<const PartPredicate> preds, const SearchBudget& budget = {})
{
    if (g.edge_count() == 0)
        throw PreconditionError("decide requires a graph with at least one edge");
    auto out = decide_with(g, preds, SearchConstraints{}, budget);
    if (out.feasible() && !verify_partition(g, *out.witness, preds))
        throw std::logic_error("exact solver produced a witness that does not verify");
    return out;
}

inline SolveOutcome decide(const Graph& g, std::initializer_list<PartPredicate> preds, const SearchBudget& budget = {})
{
    return decide(g, std::span<const PartPredicate>(preds.begin(), preds.size()), budget);
}

struct MinPartsOutcome {
    /// Feasible: `parts` is the minimum. Infeasible: no decomposition with at most max_t
    /// parts. BudgetExhausted: the search for `parts` parts ran out of budget.
    SolveStatus status = SolveStatus::Infeasible;
    std::size_t parts = 0;
    std::optional<EdgePartition> witness;
    std::uint64_t nodes = 0;
};

/// Smallest t <= max_t such that E(g) splits into t parts all satisfying `p`.
inline MinPartsOutcome min_parts(const Graph& g, const PartPredicate& p, const SearchBudget& budget,
                                 std::size_t max_t)
{
    if (g.edge_count() == 0)
        throw PreconditionError("min_parts requires a graph with at least one edge");
    if (max_t < 1)
        throw PreconditionError("max_t must be positive");
    MinPartsOutcome out;
    const std::size_t upper = std::min(max_t, g.edge_count());
    for (std::size_t t = 1; t <= upper; ++t) {
        std::vector<PartPredicate> preds(t, p);
        auto r = decide(g, preds, budget);
        out.nodes += r.nodes;
        if (r.status == SolveStatus::Feasible) {
            out.status = SolveStatus::Feasible;
            out.parts = t;
            out.witness = std::move(r.witness);
            return out;
        }
        if (r.status == SolveStatus::BudgetExhausted) {
            out.status = SolveStatus::BudgetExhausted;
            out.parts = t;
            return out;
        }
    }
    out.status = SolveStatus::Infeasible;
    return out;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_SOLVER_HPP
