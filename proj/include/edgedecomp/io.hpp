#ifndef EDGEDECOMP_IO_HPP
#define EDGEDECOMP_IO_HPP

#include <array>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edgedecomp/graph.hpp"

namespace edgedecomp {

enum class GraphFormat { EdgeList, Graph6, Dot };

/// Malformed input text. `line` is 1-based for line-oriented formats, `byte` is a
/// 0-based offset for graph6; the other field is zero.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t byte)
        : Error(what + (line ? " (line " + std::to_string(line) + ")" : " (byte " + std::to_string(byte) + ")")),
          line_(line), byte_(byte)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t byte() const noexcept { return byte_; }

private:
    std::size_t line_;
    std::size_t byte_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool is_blank(std::string_view line)
{
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got '" + std::string(tok) + "'",
                         line, 0);
    return value;
}

inline Graph parse_edge_list(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t idx = 0;
    while (idx < lines.size() && is_blank(lines[idx]))
        ++idx;
    if (idx == lines.size())
        throw ParseError("missing header line \"n m\"", 1, 0);
    auto header = split_tokens(lines[idx]);
    if (header.size() != 2)
        throw ParseError("header must be \"n m\"", idx + 1, 0);
    const auto n = parse_count(header[0], idx + 1, "vertex count");
    const auto m = parse_count(header[1], idx + 1, "edge count");
    if (n > (std::uint64_t{1} << 31))
        throw ParseError("vertex count too large", idx + 1, 0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<Edge> seen;
    for (++idx; idx < lines.size(); ++idx) {
        if (is_blank(lines[idx]))
            continue;
        const std::size_t lineno = idx + 1;
        auto tok = split_tokens(lines[idx]);
        if (tok.size() != 2)
            throw ParseError("edge line must be \"u v\"", lineno, 0);
        if (edges.size() == m)
            throw ParseError("more edge lines than the declared " + std::to_string(m), lineno, 0);
        const auto u = parse_count(tok[0], lineno, "endpoint");
        const auto v = parse_count(tok[1], lineno, "endpoint");
        if (u >= n || v >= n)
            throw ParseError("endpoint out of range for " + std::to_string(n) + " vertices", lineno, 0);
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u), lineno, 0);
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        auto key = e.normalized();
        auto pos = std::lower_bound(seen.begin(), seen.end(), key);
        if (pos != seen.end() && *pos == key)
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno, 0);
        seen.insert(pos, key);
        edges.push_back(e);
    }
    if (edges.size() != m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         lines.size(), 0);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t offset = 0;
    if (text.starts_with(header))
        offset = header.size();
    std::string_view body = text.substr(offset);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' '))
        body.remove_suffix(1);
    for (std::size_t i = 0; i < body.size(); ++i)
        if (static_cast<unsigned char>(body[i]) < 63 || static_cast<unsigned char>(body[i]) > 126)
            throw ParseError("byte outside the graph6 range 63..126", 0, offset + i);
    if (body.empty())
        throw ParseError("empty graph6 string", 0, offset);

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (pos >= body.size())
                throw ParseError("truncated graph6 size field", 0, offset + pos);
            v = (v << 6) | static_cast<std::uint64_t>(body[pos++] - 63);
        }
        return v;
    };
    std::uint64_t n = 0;
    if (body[0] != 126) {
        n = take(1);
    } else if (body.size() > 1 && body[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > (std::uint64_t{1} << 20))
        throw ParseError("graph6 vertex count too large for this reader", 0, offset);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (body.size() - pos != bytes)
        throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes, found " +
                             std::to_string(body.size() - pos),
                         0, offset + pos);
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const auto byte = static_cast<unsigned>(body[pos + k / 6] - 63);
            if (byte & (1u << (5 - k % 6)))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    std::sort(edges.begin(), edges.end());
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string write_graph6(const Graph& g)
{
    const std::uint64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
    for (const Edge& e : g.edges()) {
        const std::uint64_t i = std::min(e.u, e.v);
        const std::uint64_t j = std::max(e.u, e.v);
        const std::uint64_t k = j * (j - 1) / 2 + i;
        packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
    }
    for (auto b : packed)
        out.push_back(static_cast<char>(63 + b));
    return out;
}

inline constexpr std::array<std::string_view, 12> dot_palette = {
    "red", "blue", "green3", "orange", "purple", "cyan3",
    "magenta", "gold3", "brown", "gray40", "darkgreen", "navy"};

inline std::string escape_dot(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string write_dot(const Graph& g, const EdgePartition* coloring)
{
    std::vector<std::size_t> owner;
    if (coloring) {
        auto o = coloring->part_of_edges(g);
        if (!o)
            throw GraphError("coloring is not a valid edge partition of the graph");
        owner = std::move(*o);
    }
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (g.has_labels())
            os << " [label=\"" << escape_dot(g.label(v)) << "\"]";
        os << ";\n";
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (coloring)
            os << " [color=\"" << dot_palette[owner[e] % dot_palette.size()] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace detail

inline GraphFormat parse_format_name(std::string_view name)
{
    if (name == "edge-list" || name == "edgelist")
        return GraphFormat::EdgeList;
    if (name == "graph6" || name == "g6")
        return GraphFormat::Graph6;
    if (name == "dot")
        return GraphFormat::Dot;
    throw PreconditionError("unknown graph format '" + std::string(name) + "'");
}

/// Guesses the input format: an edge-list header has two whitespace-separated fields,
/// a graph6 string is a single token.
inline GraphFormat sniff_format(std::string_view text)
{
    for (auto line : detail::split_lines(text)) {
        if (detail::is_blank(line))
            continue;
        return detail::split_tokens(line).size() == 1 ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    }
    return GraphFormat::EdgeList;
}

/// Parses edge-list or graph6 text. Edge-list order is preserved; graph6 edges come out
/// row-major over the upper triangle.
inline Graph parse_graph(std::string_view text, GraphFormat format)
{
    switch (format) {
    case GraphFormat::EdgeList:
        return detail::parse_edge_list(text);
    case GraphFormat::Graph6:
        return detail::parse_graph6(text);
    case GraphFormat::Dot:
        break;
    }
    throw PreconditionError("DOT is an output-only format");
}

inline std::string serialize_graph(const Graph& g, GraphFormat format, const EdgePartition* coloring = nullptr)
{
    if (coloring && !coloring->is_partition_of(g))
        throw GraphError("coloring is not a valid edge partition of the graph");
    switch (format) {
    case GraphFormat::EdgeList: {
        std::ostringstream os;
        os << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges())
            os << e.u << ' ' << e.v << '\n';
        return os.str();
    }
    case GraphFormat::Graph6:
        return detail::write_graph6(g);
    case GraphFormat::Dot:
        return detail::write_dot(g, coloring);
    }
    return {};
}

/// Text form of a partition: "parts t", then per part "part i size" followed by one
/// "u v" line per edge.
inline std::string serialize_partition(const Graph& g, const EdgePartition& p)
{
    std::ostringstream os;
    os << "parts " << p.size() << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << "part " << i << ' ' << p.parts[i].size() << '\n';
        for (EdgeIndex e : p.parts[i])
            os << g.edge(e).u << ' ' << g.edge(e).v << '\n';
    }
    return os.str();
}

inline EdgePartition parse_partition(std::string_view text, const Graph& g)
{
    auto lines = detail::split_lines(text);
    std::size_t idx = 0;
    auto next_line = [&]() -> std::vector<std::string_view> {
        while (idx < lines.size() && detail::is_blank(lines[idx]))
            ++idx;
        if (idx == lines.size())
            throw ParseError("unexpected end of partition text", lines.size(), 0);
        return detail::split_tokens(lines[idx++]);
    };
    auto head = next_line();
    if (head.size() != 2 || head[0] != "parts")
        throw ParseError("partition must start with \"parts t\"", idx, 0);
    const auto t = detail::parse_count(head[1], idx, "part count");
    EdgePartition out;
    for (std::uint64_t i = 0; i < t; ++i) {
        auto ph = next_line();
        if (ph.size() != 3 || ph[0] != "part" || detail::parse_count(ph[1], idx, "part index") != i)
            throw ParseError("expected \"part " + std::to_string(i) + " size\"", idx, 0);
        const auto size = detail::parse_count(ph[2], idx, "part size");
        std::vector<EdgeIndex> members;
        for (std::uint64_t j = 0; j < size; ++j) {
            auto et = next_line();
            if (et.size() != 2)
                throw ParseError("edge line must be \"u v\"", idx, 0);
            const auto u = detail::parse_count(et[0], idx, "endpoint");
            const auto v = detail::parse_count(et[1], idx, "endpoint");
            auto e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (u >= g.vertex_count() || v >= g.vertex_count() || !e)
                throw ParseError("no edge " + std::to_string(u) + " " + std::to_string(v) + " in the graph", idx, 0);
            members.push_back(*e);
        }
        out.parts.emplace_back(std::move(members));
    }
    return out;
}

} // namespace edgedecomp

#endif // EDGEDECOMP_IO_HPP
