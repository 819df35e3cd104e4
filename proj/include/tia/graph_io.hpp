#ifndef TIA_GRAPH_IO_HPP
#define TIA_GRAPH_IO_HPP

#include "tia/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tia {

class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

namespace detail {

inline bool blank_or_comment(const std::string& line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c';
}

/// Reads one integer token; rejects trailing garbage within the token.
inline long long read_int(std::istringstream& in, int line, const char* what)
{
    std::string tok;
    if (!(in >> tok))
        throw FormatError(line, std::string("missing ") + what);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw FormatError(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw FormatError(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

inline void expect_end(std::istringstream& in, int line)
{
    std::string extra;
    if (in >> extra)
        throw FormatError(line, "unexpected token '" + extra + "'");
}

} // namespace detail

/// Parses `p tia <n> <m>` followed by m lines `e <u> <v>` (1-based ids).
/// Lines starting with `c` are comments.
inline Graph read_graph(std::istream& in)
{
    std::string line;
    int ln = 0;
    bool header = false;
    int n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++ln;
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (!header) {
            std::string kind;
            if (tag != "p" || !(ls >> kind) || kind != "tia")
                throw FormatError(ln, "expected header 'p tia <n> <m>'");
            long long nn = detail::read_int(ls, ln, "vertex count");
            m = detail::read_int(ls, ln, "edge count");
            detail::expect_end(ls, ln);
            if (nn < 0 || nn > max_vertices)
                throw FormatError(ln, "vertex count out of range");
            if (m < 0 || m > nn * (nn - 1) / 2)
                throw FormatError(ln, "edge count out of range");
            n = static_cast<int>(nn);
            header = true;
            continue;
        }
        if (tag != "e")
            throw FormatError(ln, "expected edge line 'e <u> <v>'");
        long long u = detail::read_int(ls, ln, "endpoint");
        long long v = detail::read_int(ls, ln, "endpoint");
        detail::expect_end(ls, ln);
        if (u < 1 || v < 1 || u > n || v > n)
            throw FormatError(ln, "endpoint out of range");
        if (u == v)
            throw FormatError(ln, "self-loop at " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        edge_lines.push_back(ln);
    }
    if (!header)
        throw FormatError(ln, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError(ln, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
    GraphBuilder b(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (b.has_edge(u, v))
            throw FormatError(edge_lines[i], "duplicate edge " + std::to_string(u + 1) + " " +
                                     std::to_string(v + 1));
        b.add_edge(u, v);
    }
    return b.build();
}

inline Graph read_graph_string(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

/// Canonical form: header, then edges with u < v in lexicographic order.
inline void write_graph(std::ostream& out, const Graph& g)
{
    out << "p tia " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string graph_to_string(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace tia

#endif
