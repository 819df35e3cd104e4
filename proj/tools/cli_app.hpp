#ifndef TIA_TOOLS_CLI_APP_HPP
#define TIA_TOOLS_CLI_APP_HPP

#include "tia/tia.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace tia::cli {

enum ExitCode { ok = 0, failure = 1, negative = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return in;
}

inline Graph load_graph(const std::string& path)
{
    auto in = open_input(path);
    try {
        return read_graph(in);
    } catch (const FormatError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

inline TreeDecomposition load_td(const std::string& path, const Graph& g)
{
    auto in = open_input(path);
    TreeDecomposition td;
    try {
        td = read_decomposition(in).td;
    } catch (const FormatError& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (td.universe != g.order())
        throw UsageError(path + ": decomposition is over " + std::to_string(td.universe) + " vertices, graph has " +
                         std::to_string(g.order()));
    return td;
}

/// Comma-separated 1-based ids.
inline VertexSet parse_ids(const std::string& text, int n, const char* what)
{
    VertexSet out(n);
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty())
            continue;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || v > n)
            throw UsageError(std::string("bad vertex '") + tok + "' in " + what);
        out.insert(static_cast<int>(v - 1));
    }
    return out;
}

inline std::string format_ids(const VertexSet& s)
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

inline std::vector<long long> load_weights(const std::string& path, int n)
{
    std::vector<long long> w(static_cast<std::size_t>(n), 1);
    if (path.empty())
        return w;
    auto in = open_input(path);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream row(line);
        long long v = 0, x = 0;
        std::string extra;
        if (!(row >> v >> x) || (row >> extra) || v < 1 || v > n)
            throw UsageError(path + ": line " + std::to_string(ln) + ": expected '<vertex> <weight>'");
        w[static_cast<std::size_t>(v - 1)] = x;
    }
    return w;
}

struct Settings {
    int parallel = 1;
    bool deterministic = true;

    int k = 1;
    std::string graph, td, weights;
    std::string v1, v2, v3;

    std::string family;
    std::string source;
    int n = 0;
    double p = 0.5;
    int max_clique = 4;
    std::uint64_t seed = 0;
    std::vector<int> pair;
};

inline int cmd_decompose(const Settings& s, std::ostream& out)
{
    Graph g = load_graph(s.graph);
    DecomposeOptions opts;
    opts.threads = s.parallel;
    auto res = decompose(g, s.k, opts);
    if (res.too_large()) {
        out << "TOOLARGE\n";
        return negative;
    }
    write_decomposition(out, *res.td, td_alpha(g, *res.td));
    return ok;
}

inline int cmd_validate(const Settings& s, std::ostream& out)
{
    Graph g = load_graph(s.graph);
    TreeDecomposition td = load_td(s.td, g);
    auto rep = validate(g, td);
    if (rep.ok) {
        out << "OK " << td_alpha(g, td) << '\n';
        return ok;
    }
    for (const auto& v : rep.violations) {
        out << "VIOLATION " << to_string(v.kind);
        for (int x : v.witness)
            out << ' ' << x + 1;
        out << '\n';
    }
    return negative;
}

inline int cmd_separator(const Settings& s, std::ostream& out)
{
    Graph g = load_graph(s.graph);
    int n = g.order();
    TreeDecomposition td = s.td.empty() ? TreeDecomposition::single_bag(n) : load_td(s.td, g);
    std::array<VertexSet, 3> t{parse_ids(s.v1, n, "--v1"), parse_ids(s.v2, n, "--v2"), parse_ids(s.v3, n, "--v3")};
    auto res = solve_with_decomposition(g, s.k, td, t);
    if (!res.found()) {
        out << "NOWITNESS\n";
        return negative;
    }
    out << "FOUND " << alpha(g, *res.separator);
    if (!res.separator->empty())
        out << ' ' << format_ids(*res.separator);
    out << '\n';
    return ok;
}

inline Graph generated(const Settings& s, std::ostream& out)
{
    auto need_source = [&] {
        if (s.source.empty())
            throw UsageError("generate " + s.family + ": --graph is required");
        return load_graph(s.source);
    };
    const std::string& f = s.family;
    if (f == "path")
        return gen_path(s.n);
    if (f == "cycle")
        return gen_cycle(s.n);
    if (f == "complete")
        return gen_complete(s.n);
    if (f == "petersen")
        return gen_petersen();
    if (f == "chordal")
        return gen_chordal(s.n, s.seed, s.max_clique);
    if (f == "random")
        return gen_random(s.n, s.p, s.seed);
    if (f == "blowup")
        return gen_blowup(need_source());
    if (f == "triangle")
        return gen_triangle_gadget(need_source());
    if (f == "npc")
        return gen_npc_gadget(need_source(), s.k);
    if (f == "sep-hardness") {
        std::optional<std::pair<int, int>> single;
        if (!s.pair.empty())
            single = std::pair{s.pair[0] - 1, s.pair[1] - 1};
        auto inst = gen_sep_hardness(need_source(), s.k, single);
        out << "c u " << inst.u + 1 << '\n' << "c v " << inst.v + 1 << '\n';
        return std::move(inst.graph);
    }
    throw UsageError("unknown family '" + f + "'");
}

inline int cmd_mwis(const Settings& s, std::ostream& out)
{
    Graph g = load_graph(s.graph);
    TreeDecomposition td = load_td(s.td, g);
    auto res = mwis_dp(g, td, load_weights(s.weights, g.order()));
    out << "WEIGHT " << res.weight << '\n' << "SET";
    if (!res.set.empty())
        out << ' ' << format_ids(res.set);
    out << '\n';
    return ok;
}

/// Parses and runs one command line. Results go to out, diagnostics to err.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Tree-independence number toolkit"};
    app.require_subcommand(1);
    app.add_option("--parallel", s.parallel, "Worker threads for separator guessing")->check(CLI::Range(1, 256));
    app.add_flag("--deterministic,!--no-deterministic", s.deterministic, "Deterministic output (default)");
    app.fallthrough();

    auto* dec = app.add_subcommand("decompose", "Decomposition with independence number at most 8k, or TOOLARGE");
    dec->add_option("-k", s.k, "Target")->required()->check(CLI::PositiveNumber);
    dec->add_option("graph", s.graph)->required();

    auto* val = app.add_subcommand("validate", "Check a decomposition against a graph");
    val->add_option("graph", s.graph)->required();
    val->add_option("td", s.td)->required();

    auto* alp = app.add_subcommand("alpha", "Independence number");
    alp->add_option("graph", s.graph)->required();

    auto* ex = app.add_subcommand("exact-tia", "Exact tree-independence number (at most 9 vertices)");
    ex->add_option("graph", s.graph)->required();

    auto* sep = app.add_subcommand("separator", "Three-way separator with independence number at most 2k");
    sep->add_option("-k", s.k, "Target")->required()->check(CLI::NonNegativeNumber);
    sep->add_option("--v1", s.v1, "First terminal set, comma-separated ids")->required();
    sep->add_option("--v2", s.v2, "Second terminal set")->required();
    sep->add_option("--v3", s.v3, "Third terminal set");
    sep->add_option("graph", s.graph)->required();
    sep->add_option("td", s.td);

    auto* gen = app.add_subcommand("generate", "Write a generated graph");
    gen->add_option("family", s.family,
                    "path | cycle | complete | petersen | chordal | random | blowup | triangle | npc | sep-hardness")
        ->required();
    gen->add_option("-n", s.n, "Vertex count")->check(CLI::NonNegativeNumber);
    gen->add_option("-p", s.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("-k", s.k, "Gadget parameter");
    gen->add_option("--max-clique", s.max_clique, "Clique cap for chordal graphs");
    gen->add_option("--seed", s.seed, "Random seed");
    gen->add_option("--graph", s.source, "Input graph for blowup, triangle, npc, sep-hardness");
    gen->add_option("--pair", s.pair, "Single J-graph pair i j (sep-hardness)")->expected(2);

    auto* mw = app.add_subcommand("mwis", "Maximum-weight independent set over a decomposition");
    mw->add_option("graph", s.graph)->required();
    mw->add_option("td", s.td)->required();
    mw->add_option("--weights", s.weights, "Lines '<vertex> <weight>'; missing vertices weigh 1");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }

    try {
        if (*dec)
            return cmd_decompose(s, out);
        if (*val)
            return cmd_validate(s, out);
        if (*alp) {
            Graph g = load_graph(s.graph);
            out << alpha(g, g.vertices()) << '\n';
            return ok;
        }
        if (*ex) {
            out << exact_tree_alpha(load_graph(s.graph)) << '\n';
            return ok;
        }
        if (*sep)
            return cmd_separator(s, out);
        if (*gen) {
            std::ostringstream head;
            Graph g = generated(s, head);
            out << head.str();
            write_graph(out, g);
            return ok;
        }
        if (*mw)
            return cmd_mwis(s, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}

} // namespace tia::cli

#endif
