#ifndef EDGEDECOMP_FORMULA_HPP
#define EDGEDECOMP_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgedecomp/graph.hpp"
#include "edgedecomp/io.hpp"

namespace edgedecomp {

enum class FormulaVariant { OneInThreeCubic, NaeCubic, TwoInFour };

inline const char* to_string(FormulaVariant v)
{
    switch (v) {
    case FormulaVariant::OneInThreeCubic:
        return "one-in-three";
    case FormulaVariant::NaeCubic:
        return "nae";
    case FormulaVariant::TwoInFour:
        return "two-in-four";
    }
    return "?";
}

inline FormulaVariant parse_formula_variant(std::string_view name)
{
    if (name == "one-in-three")
        return FormulaVariant::OneInThreeCubic;
    if (name == "nae")
        return FormulaVariant::NaeCubic;
    if (name == "two-in-four")
        return FormulaVariant::TwoInFour;
    throw PreconditionError("unknown formula variant '" + std::string(name) + "'");
}

/// Monotone formula; variables are 0-based, every clause is a set.
struct Formula {
    FormulaVariant variant = FormulaVariant::OneInThreeCubic;
    std::size_t variable_count = 0;
    std::vector<std::vector<std::size_t>> clauses;

    /// Number of clauses containing each variable.
    [[nodiscard]] std::vector<std::size_t> occurrences() const
    {
        std::vector<std::size_t> out(variable_count, 0);
        for (const auto& c : clauses)
            for (auto x : c)
                ++out.at(x);
        return out;
    }
};

struct Assignment {
    std::vector<bool> values;
};

/// Throws PreconditionError unless `f` satisfies the invariants of its variant.
inline void validate(const Formula& f)
{
    if (f.variable_count == 0)
        throw PreconditionError("formula needs at least one variable");
    if (f.clauses.empty())
        throw PreconditionError("formula needs at least one clause");
    for (const auto& c : f.clauses) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= f.variable_count)
                throw PreconditionError("clause refers to variable " + std::to_string(c[i] + 1) + " out of range");
            for (std::size_t j = 0; j < i; ++j)
                if (c[i] == c[j])
                    throw PreconditionError("variable repeated inside a clause");
        }
    }
    const auto occ = f.occurrences();
    switch (f.variant) {
    case FormulaVariant::OneInThreeCubic:
        for (const auto& c : f.clauses)
            if (c.size() != 3)
                throw PreconditionError("one-in-three clauses must have size 3");
        if (std::ranges::any_of(occ, [](auto n) { return n != 3; }))
            throw PreconditionError("one-in-three variables must occur in exactly 3 clauses");
        if (f.clauses.size() % 2 != 0)
            throw PreconditionError("one-in-three formulas need an even number of clauses");
        break;
    case FormulaVariant::NaeCubic:
        for (const auto& c : f.clauses)
            if (c.size() != 2 && c.size() != 3)
                throw PreconditionError("nae clauses must have size 2 or 3");
        if (std::ranges::any_of(occ, [](auto n) { return n != 3; }))
            throw PreconditionError("nae variables must occur in exactly 3 clauses");
        break;
    case FormulaVariant::TwoInFour:
        for (const auto& c : f.clauses)
            if (c.size() != 4)
                throw PreconditionError("two-in-four clauses must have size 4");
        if (std::ranges::any_of(occ, [](auto n) { return n == 0; }))
            throw PreconditionError("two-in-four variables must occur in some clause");
        break;
    }
}

inline bool clause_satisfied(FormulaVariant variant, const std::vector<std::size_t>& clause, const Assignment& a)
{
    std::size_t t = 0;
    for (auto x : clause)
        t += a.values.at(x) ? 1 : 0;
    switch (variant) {
    case FormulaVariant::OneInThreeCubic:
        return t == 1;
    case FormulaVariant::NaeCubic:
        return t >= 1 && t < clause.size();
    case FormulaVariant::TwoInFour:
        return t == 2;
    }
    return false;
}

inline bool satisfies(const Formula& f, const Assignment& a)
{
    if (a.values.size() != f.variable_count)
        return false;
    return std::ranges::all_of(f.clauses, [&](const auto& c) { return clause_satisfied(f.variant, c, a); });
}

/// Exhaustive search in increasing binary order (variable 0 is the lowest bit).
inline std::optional<Assignment> brute_force_assignment(const Formula& f)
{
    if (f.variable_count > 24)
        throw PreconditionError("brute force is limited to 24 variables");
    Assignment a{std::vector<bool>(f.variable_count)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.variable_count); ++mask) {
        for (std::size_t i = 0; i < f.variable_count; ++i)
            a.values[i] = (mask >> i) & 1;
        if (satisfies(f, a))
            return a;
    }
    return std::nullopt;
}

/// "<variant> <n> <m>" then m lines of 1-based variable indices; '#' starts a comment.
inline Formula parse_formula(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = lines[i];
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = detail::split_tokens(line);
        if (!toks.empty())
            rows.emplace_back(i + 1, std::move(toks));
    }
    if (rows.empty())
        throw ParseError("missing header \"<variant> <n> <m>\"", 1, 0);
    const auto& [hline, header] = rows.front();
    if (header.size() != 3)
        throw ParseError("header must be \"<variant> <n> <m>\"", hline, 0);
    Formula f;
    try {
        f.variant = parse_formula_variant(header[0]);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), hline, 0);
    }
    f.variable_count = detail::parse_count(header[1], hline, "variable count");
    const auto m = detail::parse_count(header[2], hline, "clause count");
    if (rows.size() - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " clauses, found " + std::to_string(rows.size() - 1), hline,
                         0);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::vector<std::size_t> clause;
        for (auto tok : rows[r].second) {
            const auto x = detail::parse_count(tok, rows[r].first, "variable index");
            if (x < 1 || x > f.variable_count)
                throw ParseError("variable index " + std::string(tok) + " out of range", rows[r].first, 0);
            clause.push_back(x - 1);
        }
        f.clauses.push_back(std::move(clause));
    }
    try {
        validate(f);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), hline, 0);
    }
    return f;
}

inline std::string serialize_formula(const Formula& f)
{
    std::string out = std::string(to_string(f.variant)) + " " + std::to_string(f.variable_count) + " " +
                      std::to_string(f.clauses.size()) + "\n";
    for (const auto& c : f.clauses) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out += (i ? " " : "") + std::to_string(c[i] + 1);
        out += "\n";
    }
    return out;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_FORMULA_HPP
