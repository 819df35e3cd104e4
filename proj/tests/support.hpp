#ifndef TIA_TESTS_SUPPORT_HPP
#define TIA_TESTS_SUPPORT_HPP

#include "tia/graph.hpp"
#include "tia/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

namespace tia::test {

inline VertexSet from_mask(int n, std::uint64_t mask)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            s.insert(v);
    return s;
}

/// alpha by plain subset enumeration over x.
inline int brute_alpha(const Graph& g, const VertexSet& x)
{
    std::vector<int> m = x.to_vector();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
        bool ok = true;
        int cnt = 0;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            if (!(mask >> i & 1))
                continue;
            ++cnt;
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if ((mask >> j & 1) && g.has_edge(m[i], m[j])) {
                    ok = false;
                    break;
                }
        }
        if (ok)
            best = std::max(best, cnt);
    }
    return best;
}

/// Whether g[x] has an independent set of size t: include or skip the lowest
/// remaining vertex, giving up once too few vertices are left.
inline bool has_independent_of_size(const Graph& g, const VertexSet& x, int t)
{
    if (t <= 0)
        return true;
    if (x.size() < t)
        return false;
    int v = x.first();
    VertexSet rest = x;
    rest.erase(v);
    VertexSet without_nbrs = rest - g.neighbors(v);
    return has_independent_of_size(g, without_nbrs, t - 1) || has_independent_of_size(g, rest, t);
}

/// True when no path avoiding s joins two different parts (BFS from each part).
inline bool bfs_separates(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& parts)
{
    int n = g.order();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].intersects(s))
            return false;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::deque<int> q;
        for (int v : parts[i]) {
            seen[static_cast<std::size_t>(v)] = 1;
            q.push_back(v);
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(u)] && !s.contains(u)) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    q.push_back(u);
                }
        }
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i)
                for (int v : parts[j])
                    if (seen[static_cast<std::size_t>(v)])
                        return false;
    }
    return true;
}

/// Vertex cover number of g[x] by enumeration of candidate covers.
inline int brute_tau(const Graph& g, const VertexSet& x)
{
    std::vector<int> m = x.to_vector();
    int best = static_cast<int>(m.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < m.size() && ok; ++i)
            for (std::size_t j = i + 1; j < m.size() && ok; ++j)
                if (g.has_edge(m[i], m[j]) && !(mask >> i & 1) && !(mask >> j & 1))
                    ok = false;
        if (ok)
            best = std::min(best, __builtin_popcountll(mask));
    }
    return best;
}

/// Decomposition check written independently of validate(): every vertex and
/// edge covered, and the nodes holding each vertex are connected, found by a
/// BFS over tree edges restricted to those nodes.
inline bool independent_td_check(const Graph& g, const TreeDecomposition& td)
{
    int t = td.node_count();
    if (t < 1 || static_cast<int>(td.tree_edges.size()) != t - 1)
        return false;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> holders;
        for (int x = 0; x < t; ++x)
            if (td.bags[static_cast<std::size_t>(x)].contains(v))
                holders.push_back(x);
        if (holders.empty())
            return false;
        std::vector<char> seen(static_cast<std::size_t>(t), 0);
        std::deque<int> q{holders[0]};
        seen[static_cast<std::size_t>(holders[0])] = 1;
        int reached = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            ++reached;
            for (auto [a, b] : td.tree_edges) {
                int y = a == x ? b : b == x ? a : -1;
                if (y >= 0 && !seen[static_cast<std::size_t>(y)] && td.bags[static_cast<std::size_t>(y)].contains(v)) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    q.push_back(y);
                }
            }
        }
        if (reached != static_cast<int>(holders.size()))
            return false;
    }
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& bag : td.bags)
            ok = ok || (bag.contains(u) && bag.contains(v));
        if (!ok)
            return false;
    }
    return true;
}

/// Decomposition from eliminating vertices in the given order: each vertex with
/// its later (fill) neighbours forms a bag, attached to the bag of the earliest
/// of those neighbours.
inline TreeDecomposition elimination_td(const Graph& g, const std::vector<int>& order)
{
    int n = g.order();
    if (n == 0)
        return TreeDecomposition::single_bag(0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> adj;
    for (int v = 0; v < n; ++v)
        adj.push_back(g.neighbors(v));
    TreeDecomposition td(n);
    std::vector<VertexSet> later(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        VertexSet l(n);
        for (int u : adj[static_cast<std::size_t>(v)])
            if (pos[static_cast<std::size_t>(u)] > i)
                l.insert(u);
        for (int u : l)
            adj[static_cast<std::size_t>(u)] |= l - VertexSet(n, {u});
        later[static_cast<std::size_t>(i)] = l;
        VertexSet bag = l;
        bag.insert(v);
        td.add_node(bag);
    }
    for (int i = 0; i < n; ++i) {
        int parent = -1;
        for (int u : later[static_cast<std::size_t>(i)])
            if (parent < 0 || pos[static_cast<std::size_t>(u)] < parent)
                parent = pos[static_cast<std::size_t>(u)];
        if (parent < 0 && i + 1 < n)
            parent = i + 1;
        if (parent >= 0)
            td.add_edge(i, parent);
    }
    return td;
}

inline TreeDecomposition random_td(const Graph& g, std::mt19937_64& eng)
{
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), eng);
    return elimination_td(g, order);
}

/// For graphs from gen_chordal: eliminating in reverse id order never adds fill,
/// so every bag is a clique.
inline TreeDecomposition clique_tree(const Graph& g)
{
    std::vector<int> order;
    for (int v = g.order() - 1; v >= 0; --v)
        order.push_back(v);
    return elimination_td(g, order);
}

} // namespace tia::test

#endif
