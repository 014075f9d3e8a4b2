#ifndef EDGEDECOMP_PREDICATES_HPP
#define EDGEDECOMP_PREDICATES_HPP

#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgedecomp/graph.hpp"

namespace edgedecomp {

enum class PredicateKind {
    Regular,
    LocallyRegular,
    LocallyIrregular,
    LocallyKIrregular,
    RegularOrLocallyIrregular,
    ComponentwiseRegularOrLocallyIrregular,
    Matching,
};

/// Validity condition for a single part. Degrees are always measured inside the part.
class PartPredicate {
public:
    constexpr PartPredicate() = default;

    static constexpr PartPredicate regular() { return PartPredicate(PredicateKind::Regular); }
    static constexpr PartPredicate locally_regular() { return PartPredicate(PredicateKind::LocallyRegular); }
    static constexpr PartPredicate locally_irregular() { return PartPredicate(PredicateKind::LocallyIrregular); }
    static constexpr PartPredicate matching() { return PartPredicate(PredicateKind::Matching); }
    static constexpr PartPredicate regular_or_locally_irregular()
    {
        return PartPredicate(PredicateKind::RegularOrLocallyIrregular);
    }
    static constexpr PartPredicate componentwise_regular_or_locally_irregular()
    {
        return PartPredicate(PredicateKind::ComponentwiseRegularOrLocallyIrregular);
    }
    static PartPredicate locally_k_irregular(unsigned k)
    {
        if (k < 1)
            throw PreconditionError("locally k-irregular requires k >= 1");
        PartPredicate p(PredicateKind::LocallyKIrregular);
        p.k_ = k;
        return p;
    }

    [[nodiscard]] constexpr PredicateKind kind() const noexcept { return kind_; }
    /// Degree gap for LocallyKIrregular; zero for every other kind.
    [[nodiscard]] constexpr unsigned k() const noexcept { return k_; }

    friend constexpr bool operator==(const PartPredicate&, const PartPredicate&) = default;

private:
    constexpr explicit PartPredicate(PredicateKind kind) : kind_(kind) {}

    PredicateKind kind_ = PredicateKind::Regular;
    unsigned k_ = 0;
};

inline std::string to_string(const PartPredicate& p)
{
    switch (p.kind()) {
    case PredicateKind::Regular:
        return "regular";
    case PredicateKind::LocallyRegular:
        return "locally-regular";
    case PredicateKind::LocallyIrregular:
        return "locally-irregular";
    case PredicateKind::LocallyKIrregular:
        return "k-irr(" + std::to_string(p.k()) + ")";
    case PredicateKind::RegularOrLocallyIrregular:
        return "reg-or-irr";
    case PredicateKind::ComponentwiseRegularOrLocallyIrregular:
        return "comp-reg-or-irr";
    case PredicateKind::Matching:
        return "matching";
    }
    return "?";
}

/// Parses one predicate name as used on the command line. `k` qualifies "k-irr".
inline PartPredicate parse_predicate(std::string_view name, unsigned k = 1)
{
    if (name == "regular")
        return PartPredicate::regular();
    if (name == "locally-regular")
        return PartPredicate::locally_regular();
    if (name == "locally-irregular" || name == "irregular")
        return PartPredicate::locally_irregular();
    if (name == "k-irr" || name == "locally-k-irregular")
        return PartPredicate::locally_k_irregular(k);
    if (name == "reg-or-irr")
        return PartPredicate::regular_or_locally_irregular();
    if (name == "comp-reg-or-irr")
        return PartPredicate::componentwise_regular_or_locally_irregular();
    if (name == "matching")
        return PartPredicate::matching();
    throw PreconditionError("unknown predicate '" + std::string(name) + "'");
}

/// Comma-separated predicate list ("regular,locally-irregular").
inline std::vector<PartPredicate> parse_predicate_list(std::string_view spec, unsigned k = 1)
{
    std::vector<PartPredicate> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find(',', start);
        if (end == std::string_view::npos)
            end = spec.size();
        auto name = spec.substr(start, end - start);
        if (name.empty())
            throw PreconditionError("empty predicate name in '" + std::string(spec) + "'");
        out.push_back(parse_predicate(name, k));
        start = end + 1;
    }
    return out;
}

namespace detail {

inline bool regular_degrees(std::span<const std::uint32_t> deg)
{
    std::uint32_t common = 0;
    for (auto d : deg) {
        if (d == 0)
            continue;
        if (common == 0)
            common = d;
        else if (d != common)
            return false;
    }
    return true;
}

inline bool all_edges_gap(const Graph& g, const EdgeSubset& s, std::span<const std::uint32_t> deg, unsigned gap)
{
    for (EdgeIndex e : s) {
        const auto du = deg[g.edge(e).u];
        const auto dv = deg[g.edge(e).v];
        const auto diff = du > dv ? du - dv : dv - du;
        if (diff < gap)
            return false;
    }
    return true;
}

inline bool locally_regular_degrees(const Graph& g, const EdgeSubset& s, std::span<const std::uint32_t> deg)
{
    for (EdgeIndex e : s)
        if (deg[g.edge(e).u] != deg[g.edge(e).v])
            return false;
    return true;
}

inline bool satisfies_nonempty(const Graph& g, const EdgeSubset& s, const PartPredicate& p)
{
    const auto deg = subset_degrees(g, s);
    switch (p.kind()) {
    case PredicateKind::Regular:
        return regular_degrees(deg);
    case PredicateKind::LocallyRegular:
        return locally_regular_degrees(g, s, deg);
    case PredicateKind::LocallyIrregular:
        return all_edges_gap(g, s, deg, 1);
    case PredicateKind::LocallyKIrregular:
        return all_edges_gap(g, s, deg, p.k());
    case PredicateKind::Matching:
        for (auto d : deg)
            if (d > 1)
                return false;
        return true;
    case PredicateKind::RegularOrLocallyIrregular:
        return regular_degrees(deg) || all_edges_gap(g, s, deg, 1);
    case PredicateKind::ComponentwiseRegularOrLocallyIrregular:
        for (const auto& comp : components(g, s)) {
            const auto cd = subset_degrees(g, comp);
            if (!regular_degrees(cd) && !all_edges_gap(g, comp, cd, 1))
                return false;
        }
        return true;
    }
    return false;
}

} // namespace detail

/// Whether the edge-induced subgraph G[s] satisfies `p`. Parts are nonempty by definition,
/// so an empty `s` is rejected with PreconditionError.
inline bool satisfies(const Graph& g, const EdgeSubset& s, const PartPredicate& p)
{
    require_valid(g, s);
    if (s.empty())
        throw PreconditionError("predicates are only defined on nonempty parts");
    return detail::satisfies_nonempty(g, s, p);
}

/// True iff `partition` is a partition of E(g) into nonempty parts and part i satisfies
/// preds[i]. A single predicate is broadcast to every part.
inline bool verify_partition(const Graph& g, const EdgePartition& partition, std::span<const PartPredicate> preds)
{
    if (preds.size() != 1 && preds.size() != partition.size())
        throw PreconditionError("predicate count " + std::to_string(preds.size()) + " does not match part count " +
                                std::to_string(partition.size()));
    if (!partition.is_partition_of(g))
        return false;
    for (std::size_t i = 0; i < partition.size(); ++i)
        if (!detail::satisfies_nonempty(g, partition.parts[i], preds.size() == 1 ? preds[0] : preds[i]))
            return false;
    return true;
}

inline bool verify_partition(const Graph& g, const EdgePartition& partition, const PartPredicate& pred)
{
    return verify_partition(g, partition, std::span<const PartPredicate>(&pred, 1));
}

} // namespace edgedecomp

#endif // EDGEDECOMP_PREDICATES_HPP
