#ifndef TIA_GRAPH_HPP
#define TIA_GRAPH_HPP

#include "tia/vertex_set.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tia {

/// Largest vertex count accepted by the library.
inline constexpr int max_vertices = 10000;

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, immutable after construction.
/// Adjacency is held as one bitset row per vertex.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                        " outside [0, " + std::to_string(max_vertices) + "]");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    /// Rejects self-loops, out-of-range ids and repeated edges.
    Graph(int n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (auto [u, v] : edges) {
            check_pair(u, v);
            if (adj_[u].contains(v))
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + "-" +
                                            std::to_string(v));
            link(u, v);
        }
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_.at(u).contains(v); }
    const VertexSet& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return adj_.at(v).size(); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    /// N[x]: x together with every neighbor of a member of x.
    VertexSet closed_neighborhood(const VertexSet& x) const
    {
        VertexSet out = x;
        for (int v : x)
            out |= adj_[v];
        return out;
    }

    /// N(x) = N[x] \ x.
    VertexSet neighborhood(const VertexSet& x) const { return closed_neighborhood(x) - x; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;

    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("Graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
    }

    void link(int u, int v)
    {
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Accumulates edges idempotently; used by the generators where gadget
/// joins may name the same pair twice.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    int order() const noexcept { return g_.order(); }

    void add_edge(int u, int v)
    {
        g_.check_pair(u, v);
        if (!g_.adj_[u].contains(v))
            g_.link(u, v);
    }

    /// Makes every vertex of a adjacent to every vertex of b (pairs u == v skipped).
    void join(const std::vector<int>& a, const std::vector<int>& b)
    {
        for (int u : a)
            for (int v : b)
                if (u != v)
                    add_edge(u, v);
    }

    void make_clique(const std::vector<int>& members)
    {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                add_edge(members[i], members[j]);
    }

    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }

    Graph build() const { return g_; }

private:
    Graph g_;
};

inline Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                b.add_edge(u, v);
    return b.build();
}

/// g[x] with vertices renumbered 0..|x|-1 in increasing original id order.
struct InducedGraph {
    Graph graph;
    std::vector<int> to_parent;   ///< local id -> parent id
    std::vector<int> from_parent; ///< parent id -> local id, or -1

    VertexSet lift(const VertexSet& local, int parent_universe) const
    {
        VertexSet out(parent_universe);
        for (int v : local)
            out.insert(to_parent[static_cast<std::size_t>(v)]);
        return out;
    }

    /// Members of `parent` that survive in the induced graph, in local ids.
    VertexSet restrict(const VertexSet& parent) const
    {
        VertexSet out(graph.order());
        for (int v : parent) {
            int l = from_parent[static_cast<std::size_t>(v)];
            if (l >= 0)
                out.insert(l);
        }
        return out;
    }
};

inline InducedGraph induced(const Graph& g, const VertexSet& x)
{
    InducedGraph r;
    r.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
    for (int v : x) {
        r.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(r.to_parent.size());
        r.to_parent.push_back(v);
    }
    GraphBuilder b(static_cast<int>(r.to_parent.size()));
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
        VertexSet nb = g.neighbors(r.to_parent[i]) & x;
        for (int w : nb) {
            int j = r.from_parent[static_cast<std::size_t>(w)];
            if (static_cast<std::size_t>(j) > i)
                b.add_edge(static_cast<int>(i), j);
        }
    }
    r.graph = b.build();
    return r;
}

/// Vertices reachable from `sources` using only vertices of `allowed`
/// (sources themselves are always included).
inline VertexSet reachable(const Graph& g, const VertexSet& sources, const VertexSet& allowed)
{
    VertexSet seen = sources;
    VertexSet frontier = sources;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        for (int v : frontier)
            next |= g.neighbors(v);
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

/// Connected components of g[x], ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& x)
{
    std::vector<VertexSet> out;
    VertexSet rest = x;
    for (int v = rest.first(); v >= 0; v = rest.first()) {
        VertexSet comp = reachable(g, VertexSet(g.order(), {v}), x);
        rest -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

/// True iff s avoids every part and g - s has no path between two distinct parts.
inline bool is_separator(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& parts)
{
    VertexSet all(g.order());
    for (const auto& p : parts) {
        if (p.intersects(s))
            return false;
        if (p.intersects(all))
            return false;
        all |= p;
    }
    VertexSet open = s.complement();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty())
            continue;
        VertexSet reach = reachable(g, parts[i], open);
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i && reach.intersects(parts[j]))
                return false;
    }
    return true;
}

inline bool is_independent(const Graph& g, const VertexSet& x)
{
    for (int v : x)
        if (g.neighbors(v).intersects(x))
            return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& x)
{
    for (int v : x) {
        VertexSet rest = x;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

namespace detail {

/// Greedy clique cover of g[p]; its size bounds alpha(g[p]) from above.
inline int clique_cover_bound(const Graph& g, VertexSet p)
{
    int cliques = 0;
    for (int u = p.first(); u >= 0; u = p.first()) {
        VertexSet cand = p & g.neighbors(u);
        p.erase(u);
        for (int w = cand.first(); w >= 0; w = cand.first()) {
            p.erase(w);
            cand &= g.neighbors(w);
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const Graph& g;
    VertexSet best;
    int best_size = -1;

    void run(VertexSet p, VertexSet cur)
    {
        // Vertices of degree <= 1 in g[p] belong to some maximum independent set.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : p) {
                VertexSet nb = g.neighbors(v) & p;
                if (nb.size() <= 1) {
                    cur.insert(v);
                    p -= nb;
                    p.erase(v);
                    changed = true;
                    break;
                }
            }
        }
        int cs = cur.size();
        if (p.empty()) {
            if (cs > best_size) {
                best_size = cs;
                best = cur;
            }
            return;
        }
        if (cs + clique_cover_bound(g, p) <= best_size)
            return;

        int pick = -1, pick_deg = -1;
        for (int v : p) {
            int d = (g.neighbors(v) & p).size();
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        VertexSet with = cur;
        with.insert(pick);
        run(p - g.neighbors(pick) - VertexSet(g.order(), {pick}), std::move(with));
        p.erase(pick);
        run(std::move(p), std::move(cur));
    }
};

} // namespace detail

/// A maximum independent set of g[x] (exact branch and bound).
inline VertexSet maximum_independent_set(const Graph& g, const VertexSet& x)
{
    detail::MisSearch s{g, VertexSet(g.order())};
    s.run(x, VertexSet(g.order()));
    return s.best;
}

/// alpha(g[x]).
inline int alpha(const Graph& g, const VertexSet& x)
{
    if (x.empty())
        return 0;
    return maximum_independent_set(g, x).size();
}

/// Vertex cover number of g[x], via tau = |x| - alpha.
inline int tau(const Graph& g, const VertexSet& x) { return x.size() - alpha(g, x); }

/// Lexicographically least independent subset of x with exactly `count` members.
inline std::optional<VertexSet> least_independent_set(const Graph& g, const VertexSet& x, int count)
{
    if (count < 0)
        return std::nullopt;
    std::optional<VertexSet> found;
    std::function<bool(const VertexSet&, VertexSet&, int)> dfs =
        [&](const VertexSet& cand, VertexSet& cur, int need) -> bool {
        if (need == 0) {
            found = cur;
            return true;
        }
        if (cand.size() < need || detail::clique_cover_bound(g, cand) < need)
            return false;
        for (int v : cand) {
            VertexSet next = cand - g.neighbors(v);
            // Only members above v remain candidates.
            for (int u = next.first(); u >= 0 && u <= v; u = next.next(u + 1))
                next.erase(u);
            cur.insert(v);
            if (dfs(next, cur, need - 1))
                return true;
            cur.erase(v);
        }
        return false;
    };
    VertexSet cur(g.order());
    dfs(x, cur, count);
    return found;
}

/// Calls `fn` on every independent subset of x of exactly `count` members, in
/// lexicographic order. Enumeration stops early if `fn` returns false.
template <typename Fn>
void for_each_independent_set(const Graph& g, const VertexSet& x, int count, Fn&& fn)
{
    if (count < 0)
        return;
    std::vector<int> members = x.to_vector();
    VertexSet cur(g.order());
    bool stop = false;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int need) {
        if (stop)
            return;
        if (need == 0) {
            if (!fn(static_cast<const VertexSet&>(cur)))
                stop = true;
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= members.size(); ++i) {
            int v = members[i];
            if (g.neighbors(v).intersects(cur))
                continue;
            cur.insert(v);
            rec(i + 1, need - 1);
            cur.erase(v);
            if (stop)
                return;
        }
    };
    rec(0, count);
}

/// Chordality test: maximum cardinality search, then a perfect elimination
/// ordering check on the reversed visit order.
inline bool is_chordal(const Graph& g)
{
    int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (position[v] < 0 && (pick < 0 || weight[v] > weight[pick]))
                pick = v;
        position[pick] = step;
        visit.push_back(pick);
        for (int w : g.neighbors(pick))
            if (position[w] < 0)
                ++weight[w];
    }
    // Elimination order is the reverse of the visit order: a vertex's later
    // neighbors are those visited before it.
    for (int v : visit) {
        int parent = -1;
        VertexSet earlier(n);
        for (int w : g.neighbors(v))
            if (position[w] < position[v]) {
                earlier.insert(w);
                if (parent < 0 || position[w] > position[parent])
                    parent = w;
            }
        if (parent < 0)
            continue;
        earlier.erase(parent);
        if (!earlier.is_subset_of(g.neighbors(parent)))
            return false;
    }
    return true;
}

} // namespace tia

#endif
