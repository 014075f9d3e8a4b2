#ifndef EDGEDECOMP_TOOLS_CLI_HPP
#define EDGEDECOMP_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgedecomp.hpp"

namespace edgedecomp::cli {

enum ExitCode : int {
    exit_true = 0,
    exit_false = 1,
    exit_budget = 2,
    exit_usage = 64,
    exit_data = 65,
};

/// Thrown for bad flag combinations; maps to exit code 64.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input that cannot be read or violates an algorithm's precondition; exit code 65.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream os;
    if (path.empty() || path == "-") {
        os << in.rdbuf();
        return os.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw DataError("cannot open '" + path + "'");
    os << file.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw DataError("cannot write '" + path + "'");
    file << text;
}

inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("EDGEDECOMP_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return SearchBudget{}.max_nodes;
}

struct Options {
    std::string input;
    std::string format = "auto";
    std::string output_format = "edge-list";
    std::string pred;
    std::size_t parts = 0;
    unsigned k = 1;
    unsigned alpha = 3;
    unsigned p = 0;
    bool k_set = false;
    bool min_parts = false;
    std::size_t max_t = 0;
    std::uint64_t budget = 0;
    bool deterministic = false;
    unsigned jobs = 1;
    std::string dot;
    std::string parts_file;
    std::string algo;
    std::string kind;
    bool round_trip = false;
};

inline Graph load_graph(const Options& o, std::istream& in)
{
    const auto text = read_input(o.input, in);
    GraphFormat f;
    try {
        f = o.format == "auto" ? sniff_format(text) : parse_format_name(o.format);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    return parse_graph(text, f);
}

inline GraphFormat output_format(const Options& o)
{
    try {
        return parse_format_name(o.output_format);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
}

inline std::vector<PartPredicate> predicates(const Options& o)
{
    if (o.pred.empty())
        throw UsageError("--pred is required");
    std::vector<PartPredicate> list;
    try {
        list = parse_predicate_list(o.pred, o.k);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    if (o.parts == 0)
        return list;
    if (list.size() == 1)
        return std::vector<PartPredicate>(o.parts, list.front());
    if (list.size() != o.parts)
        throw UsageError("--parts does not match the number of listed predicates");
    return list;
}

inline SearchBudget budget(const Options& o)
{
    SearchBudget b;
    b.max_nodes = o.budget ? o.budget : default_budget();
    b.deterministic = o.deterministic || o.jobs <= 1;
    b.jobs = o.deterministic ? 1 : std::max(1u, o.jobs);
    return b;
}

inline void print_partition(std::ostream& out, const Graph& g, const EdgePartition& p, const Options& o)
{
    out << serialize_partition(g, p);
    if (!o.dot.empty())
        write_file(o.dot, serialize_graph(g, GraphFormat::Dot, &p));
}

inline int cmd_check(const Options& o, std::istream& in, std::ostream& out)
{
    const auto g = load_graph(o, in);
    const auto preds = predicates(o);
    if (g.edge_count() == 0)
        throw DataError("graph has no edges");
    bool all = true;
    for (const auto& p : preds) {
        const bool ok = satisfies(g, g.all_edges(), p);
        all = all && ok;
        out << to_string(p) << ": " << (ok ? "true" : "false") << '\n';
    }
    return all ? exit_true : exit_false;
}

inline int cmd_solve(const Options& o, std::istream& in, std::ostream& out)
{
    const auto g = load_graph(o, in);
    if (g.edge_count() == 0)
        throw DataError("graph has no edges");
    const auto b = budget(o);
    if (o.min_parts) {
        const auto list = predicates(Options{.pred = o.pred, .k = o.k});
        if (list.size() != 1)
            throw UsageError("--min-parts takes a single predicate");
        const std::size_t max_t = o.max_t ? o.max_t : g.edge_count();
        const auto r = min_parts(g, list.front(), b, max_t);
        switch (r.status) {
        case SolveStatus::Feasible:
            out << r.parts << '\n';
            print_partition(out, g, *r.witness, o);
            return exit_true;
        case SolveStatus::Infeasible:
            out << "infeasible up to " << max_t << '\n';
            return exit_false;
        case SolveStatus::BudgetExhausted:
            out << "budget-exhausted at " << r.parts << '\n';
            return exit_budget;
        }
    }
    const auto preds = predicates(o);
    const auto r = decide(g, preds, b);
    out << to_string(r.status) << '\n';
    if (r.status == SolveStatus::Feasible) {
        print_partition(out, g, *r.witness, o);
        return exit_true;
    }
    return r.status == SolveStatus::Infeasible ? exit_false : exit_budget;
}

inline void print_labeled(std::ostream& out, const Graph& g, const LabeledPartition& lp, const Options& o)
{
    out << "predicates";
    for (const auto& p : lp.predicates)
        out << ' ' << to_string(p);
    out << '\n';
    print_partition(out, g, lp.partition, o);
}

inline void print_subset(std::ostream& out, const Graph& g, const EdgeSubset& s)
{
    out << "edges " << s.size() << '\n';
    for (EdgeIndex e : s)
        out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
}

inline int cmd_poly(const Options& o, std::istream& in, std::ostream& out)
{
    const auto g = load_graph(o, in);
    const auto& a = o.algo;
    if (a == "matching") {
        print_subset(out, g, max_matching(g));
        return exit_true;
    }
    if (a == "two-factor") {
        const auto f = two_factor(g);
        if (!f) {
            out << "absent\n";
            return exit_false;
        }
        print_subset(out, g, *f);
        return exit_true;
    }
    if (a == "two-regular") {
        const auto p = two_regular_parts_low_degree(g);
        if (!p) {
            out << "absent\n";
            return exit_false;
        }
        print_partition(out, g, *p, o);
        return exit_true;
    }
    if (a == "tree-matching-plus") {
        print_labeled(out, g, tree_matching_plus(g).labeled(), o);
        return exit_true;
    }
    if (a == "tree-two-matchings") {
        print_labeled(out, g, tree_two_matchings_irregular(g), o);
        return exit_true;
    }
    if (a == "tree-delta") {
        print_partition(out, g, tree_delta_matchings(g), o);
        return exit_true;
    }
    if (a == "k-irr-conditions") {
        const auto r = k_irregular_conditions(g, o.k);
        out << "A " << (r.condition_a ? "true" : "false") << '\n';
        out << "B " << (r.condition_b ? "true" : "false") << '\n';
        out << "C " << (r.condition_c ? "true" : "false") << '\n';
        if (r.violating_edge)
            out << "violating " << g.edge(*r.violating_edge).u << ' ' << g.edge(*r.violating_edge).v << '\n';
        return r.all() ? exit_true : exit_false;
    }
    if (a == "k-irr-two-parts") {
        const auto p = k_irregular_two_parts(g, o.k);
        if (!p) {
            out << "absent\n";
            return exit_false;
        }
        print_partition(out, g, *p, o);
        return exit_true;
    }
    if (a == "semi-coloring" || a == "locally-regular-parts") {
        const auto sc = find_semi_coloring(g, budget(o));
        if (!sc) {
            out << "budget-exhausted\n";
            return exit_budget;
        }
        if (a == "locally-regular-parts") {
            print_partition(out, g, extract_locally_regular_parts(g, *sc), o);
            return exit_true;
        }
        out << "labels " << g.edge_count() << '\n';
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            const auto& l = sc->labels[e];
            out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << l.first;
            if (l.is_pair())
                out << ' ' << l.second;
            out << '\n';
        }
        return exit_true;
    }
    throw UsageError("unknown algorithm '" + a + "'");
}

inline int cmd_gen(const Options& o, std::ostream& out)
{
    GadgetKind kind;
    try {
        kind = parse_gadget_kind(o.kind, [&](std::string_view name) -> unsigned {
            if (name == "alpha")
                return o.alpha;
            if (name == "p") {
                if (o.p == 0)
                    throw UsageError("--p is required for " + o.kind);
                return o.p;
            }
            if (!o.k_set)
                throw UsageError("--k is required for " + o.kind);
            return o.k;
        });
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    Graph g;
    try {
        g = build_gadget(kind);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    out << serialize_graph(g, output_format(o));
    return exit_true;
}

inline int cmd_reduce(const Options& o, std::istream& in, std::ostream& out)
{
    const auto f = parse_formula(read_input(o.input, in));
    ReductionParams params;
    params.alpha = o.alpha;
    params.k = o.k_set ? o.k : 2;
    const auto g = reduce_to_graph(f, params);
    if (!o.round_trip) {
        out << serialize_graph(g, output_format(o));
        return exit_true;
    }
    const auto a = brute_force_assignment(f);
    if (!a) {
        out << "unsatisfiable\n";
        return exit_false;
    }
    const auto p = assignment_to_decomposition(f, *a, g, params);
    const auto back = decomposition_to_assignment(f, g, p, params);
    out << "round-trip ok\nassignment";
    for (bool v : back.values)
        out << ' ' << (v ? 1 : 0);
    out << '\n';
    if (!o.dot.empty())
        write_file(o.dot, serialize_graph(g, GraphFormat::Dot, &p));
    return exit_true;
}

inline int cmd_verify(const Options& o, std::istream& in, std::ostream& out)
{
    if (o.parts_file.empty())
        throw UsageError("--parts-file is required");
    const auto g = load_graph(o, in);
    const auto partition = parse_partition(read_input(o.parts_file, in), g);
    auto preds = predicates(o);
    if (preds.size() != 1 && preds.size() != partition.size()) {
        out << "invalid: part count " << partition.size() << " does not match " << preds.size() << " predicates\n";
        return exit_false;
    }
    const bool ok = verify_partition(g, partition, preds);
    out << (ok ? "valid" : "invalid") << '\n';
    return ok ? exit_true : exit_false;
}

} // namespace detail

/// Runs one command line (without the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Edge decompositions into regular and locally irregular parts", "edgedecomp"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", o.input, "Graph file (default: standard input)");
        c->add_option("--format", o.format, "Input format: auto, edge-list, graph6");
    };
    auto add_pred = [&](CLI::App* c) {
        c->add_option("--pred", o.pred, "Predicate or comma-separated list");
        c->add_option("--parts", o.parts, "Broadcast a single predicate to this many parts");
    };
    auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "Gap for k-irr / gadget parameter")->check(CLI::PositiveNumber); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "Search node budget (default from EDGEDECOMP_BUDGET)");
        c->add_flag("--deterministic", o.deterministic, "Sequential, reproducible search");
        c->add_option("--jobs", o.jobs, "Worker threads for non-deterministic search");
    };

    auto* check = app.add_subcommand("check", "Check predicates on the whole edge set");
    add_input(check);
    add_pred(check);
    add_k(check);

    auto* solve = app.add_subcommand("solve", "Exact decomposition search");
    add_input(solve);
    add_pred(solve);
    add_k(solve);
    add_budget(solve);
    solve->add_flag("--min-parts", o.min_parts, "Find the minimum number of parts");
    solve->add_option("--max-t", o.max_t, "Largest part count tried by --min-parts");
    solve->add_option("--dot", o.dot, "Write the colored graph in DOT to this path");

    auto* poly = app.add_subcommand("poly", "Polynomial-time algorithms");
    poly->add_option("algo", o.algo,
                     "matching, two-factor, two-regular, tree-matching-plus, tree-two-matchings, tree-delta, "
                     "k-irr-conditions, k-irr-two-parts, semi-coloring, locally-regular-parts")
        ->required();
    add_input(poly);
    add_k(poly);
    add_budget(poly);
    poly->add_option("--dot", o.dot, "Write the colored graph in DOT to this path");

    auto* gen = app.add_subcommand("gen", "Emit a named gadget graph");
    gen->add_option("kind", o.kind, "Gadget name")->required();
    gen->add_option("--k", o.k, "k parameter")->check(CLI::PositiveNumber)->each([&](const std::string&) {
        o.k_set = true;
    });
    gen->add_option("--alpha", o.alpha, "alpha parameter");
    gen->add_option("--p", o.p, "prime parameter");
    gen->add_option("--output-format", o.output_format, "edge-list, graph6 or dot");

    auto* reduce = app.add_subcommand("reduce", "Build the reduction graph of a formula");
    reduce->add_option("input", o.input, "Formula file (default: standard input)");
    reduce->add_option("--alpha", o.alpha, "alpha for nae formulas");
    reduce->add_option("--k", o.k, "k for two-in-four formulas")->check(CLI::PositiveNumber)->each(
        [&](const std::string&) { o.k_set = true; });
    reduce->add_flag("--round-trip", o.round_trip, "Solve by brute force and convert both ways");
    reduce->add_option("--output-format", o.output_format, "edge-list, graph6 or dot");
    reduce->add_option("--dot", o.dot, "With --round-trip, write the certificate in DOT");

    auto* verify = app.add_subcommand("verify", "Validate a partition file");
    add_input(verify);
    add_pred(verify);
    add_k(verify);
    verify->add_option("--parts-file", o.parts_file, "Partition file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_true;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_true;
    } catch (const CLI::ParseError& e) {
        err << "edgedecomp: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (check->parsed())
            return detail::cmd_check(o, in, out);
        if (solve->parsed())
            return detail::cmd_solve(o, in, out);
        if (poly->parsed())
            return detail::cmd_poly(o, in, out);
        if (gen->parsed())
            return detail::cmd_gen(o, out);
        if (reduce->parsed())
            return detail::cmd_reduce(o, in, out);
        if (verify->parsed())
            return detail::cmd_verify(o, in, out);
    } catch (const UsageError& e) {
        err << "edgedecomp: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "edgedecomp: " << e.what() << '\n';
        return exit_data;
    } catch (const Error& e) {
        err << "edgedecomp: " << e.what() << '\n';
        return exit_data;
    } catch (const DataError& e) {
        err << "edgedecomp: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}

} // namespace edgedecomp::cli

#endif // EDGEDECOMP_TOOLS_CLI_HPP
