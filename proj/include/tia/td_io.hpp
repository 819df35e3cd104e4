#ifndef TIA_TD_IO_HPP
#define TIA_TD_IO_HPP

#include "tia/graph_io.hpp"
#include "tia/tree_decomposition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tia {

struct ParsedDecomposition {
    TreeDecomposition td;
    int k_reported = 0;
};

/// Parses `s tia <t> <k_reported> <n>`, t bag lines `b <node> <v...>` and
/// t-1 tree edge lines `<i> <j>`; all ids 1-based. Whether the edges form a
/// tree is left to validate().
inline ParsedDecomposition read_decomposition(std::istream& in)
{
    std::string line;
    int ln = 0;
    bool header = false;
    long long t = 0;
    ParsedDecomposition out;
    std::vector<char> bag_seen;
    long long edges_read = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream ls(line);
        if (!header) {
            std::string tag, kind;
            ls >> tag;
            if (tag != "s" || !(ls >> kind) || kind != "tia")
                throw FormatError(ln, "expected header 's tia <t> <k> <n>'");
            t = detail::read_int(ls, ln, "node count");
            long long k = detail::read_int(ls, ln, "reported width");
            long long n = detail::read_int(ls, ln, "vertex count");
            detail::expect_end(ls, ln);
            if (t < 1 || t > 100000000)
                throw FormatError(ln, "node count out of range");
            if (n < 0 || n > max_vertices)
                throw FormatError(ln, "vertex count out of range");
            if (k < 0)
                throw FormatError(ln, "negative reported width");
            out.k_reported = static_cast<int>(k);
            out.td = TreeDecomposition(static_cast<int>(n));
            out.td.bags.assign(static_cast<std::size_t>(t), VertexSet(static_cast<int>(n)));
            bag_seen.assign(static_cast<std::size_t>(t), 0);
            header = true;
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "b") {
            long long id = detail::read_int(ls, ln, "node id");
            if (id < 1 || id > t)
                throw FormatError(ln, "node id out of range");
            auto& seen = bag_seen[static_cast<std::size_t>(id - 1)];
            if (seen)
                throw FormatError(ln, "bag " + std::to_string(id) + " given twice");
            seen = 1;
            auto& bag = out.td.bags[static_cast<std::size_t>(id - 1)];
            std::string tok;
            while (ls >> tok) {
                std::istringstream one(tok);
                long long v = detail::read_int(one, ln, "vertex id");
                if (v < 1 || v > out.td.universe)
                    throw FormatError(ln, "vertex id out of range");
                if (bag.contains(static_cast<int>(v - 1)))
                    throw FormatError(ln, "vertex repeated in bag");
                bag.insert(static_cast<int>(v - 1));
            }
            continue;
        }
        std::istringstream es(line);
        long long a = detail::read_int(es, ln, "tree edge endpoint");
        long long b = detail::read_int(es, ln, "tree edge endpoint");
        detail::expect_end(es, ln);
        if (a < 1 || b < 1 || a > t || b > t)
            throw FormatError(ln, "tree edge endpoint out of range");
        out.td.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
        ++edges_read;
    }
    if (!header)
        throw FormatError(ln, "missing header");
    for (std::size_t i = 0; i < bag_seen.size(); ++i)
        if (!bag_seen[i])
            throw FormatError(ln, "missing bag " + std::to_string(i + 1));
    if (edges_read != t - 1)
        throw FormatError(ln, "expected " + std::to_string(t - 1) + " tree edges, found " +
                                  std::to_string(edges_read));
    return out;
}

inline ParsedDecomposition read_decomposition_string(const std::string& text)
{
    std::istringstream in(text);
    return read_decomposition(in);
}

/// Canonical form: bags in node order with sorted members, tree edges as
/// (min, max) pairs in lexicographic order.
inline void write_decomposition(std::ostream& out, const TreeDecomposition& td, int k_reported)
{
    out << "s tia " << td.node_count() << ' ' << k_reported << ' ' << td.universe << '\n';
    for (int x = 0; x < td.node_count(); ++x) {
        out << "b " << x + 1;
        for (int v : td.bags[static_cast<std::size_t>(x)])
            out << ' ' << v + 1;
        out << '\n';
    }
    std::vector<Edge> edges;
    for (auto [a, b] : td.tree_edges)
        edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges)
        out << a + 1 << ' ' << b + 1 << '\n';
}

inline std::string decomposition_to_string(const TreeDecomposition& td, int k_reported)
{
    std::ostringstream out;
    write_decomposition(out, td, k_reported);
    return out.str();
}

} // namespace tia

#endif
