#ifndef TIA_GENERATORS_HPP
#define TIA_GENERATORS_HPP

#include "tia/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tia {

inline Graph gen_path(int n)
{
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

inline Graph gen_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("gen_cycle: need at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

inline Graph gen_complete(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

/// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
inline Graph gen_petersen()
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return b.build();
}

/// Two copies of g (ids 0..n-1 and n..2n-1) with every cross pair adjacent.
inline Graph gen_blowup(const Graph& g)
{
    int n = g.order();
    GraphBuilder b(2 * n);
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(u + n, v + n);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            b.add_edge(u, v + n);
    return b.build();
}

inline bool has_k4(const Graph& g)
{
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        for (int x : common)
            if ((g.neighbors(x) & common).size() > 0)
                return true;
    }
    return false;
}

/// Complement copies G1 (0..n-1) and G2 (n..2n-1) joined by the matching
/// v -- v+n; then x_1..x_{k+1} complete to G1, y_1..y_{k+1} complete to G2,
/// and for k >= 5 the vertices z_1..z_{k-4} complete to all x's and y's.
inline Graph gen_npc_gadget(const Graph& g, int k)
{
    if (k < 4)
        throw std::invalid_argument("gen_npc_gadget: k must be at least 4");
    if (has_k4(g))
        throw std::invalid_argument("gen_npc_gadget: input contains K4");
    int n = g.order();
    int extra_z = std::max(0, k - 4);
    int x0 = 2 * n, y0 = x0 + k + 1, z0 = y0 + k + 1;
    GraphBuilder b(z0 + extra_z);
    for (int u = 0; u < n; ++u) {
        b.add_edge(u, u + n);
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                b.add_edge(u, v);
                b.add_edge(u + n, v + n);
            }
    }
    for (int i = 0; i <= k; ++i)
        for (int v = 0; v < n; ++v) {
            b.add_edge(x0 + i, v);
            b.add_edge(y0 + i, v + n);
        }
    for (int j = 0; j < extra_z; ++j)
        for (int i = 0; i <= k; ++i) {
            b.add_edge(z0 + j, x0 + i);
            b.add_edge(z0 + j, y0 + i);
        }
    return b.build();
}

/// g (ids kept), then w_uv for each edge in sorted edge order, adjacent to u
/// and v, then two 5-wheels, each laid out as hub followed by its rim cycle.
inline Graph gen_triangle_gadget(const Graph& g)
{
    int n = g.order();
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    GraphBuilder b(n + m + 12);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[static_cast<std::size_t>(e)];
        b.add_edge(u, v);
        b.add_edge(u, n + e);
        b.add_edge(v, n + e);
    }
    for (int w = 0; w < 2; ++w) {
        int hub = n + m + 6 * w;
        for (int i = 0; i < 5; ++i) {
            b.add_edge(hub, hub + 1 + i);
            b.add_edge(hub + 1 + i, hub + 1 + (i + 1) % 5);
        }
    }
    return b.build();
}

struct SepHardnessInstance {
    Graph graph;
    int u = 0;
    int v = 0;
};

/// Chain of J-graphs J_{i,j} over all pairs (i, j) in lexicographic order, or
/// only the given pair. Block t occupies 2n+6 ids starting at t(2n+6):
/// L copy, R copy (complements of g), Z_L (3), Z_R (3). Inside a block the
/// copies are matched, v_i in L is complete to R ∪ Z_R and v_j in R is
/// complete to L ∪ Z_L. The right side R ∪ Z_R of each block is complete to
/// the left side L ∪ Z_L of the next one. After the blocks come u (complete to
/// the first left side), v (complete to the last right side) and k-3 vertices
/// adjacent to both u and v.
inline SepHardnessInstance gen_sep_hardness(const Graph& g, int k,
                                            std::optional<std::pair<int, int>> single = std::nullopt)
{
    if (k < 3)
        throw std::invalid_argument("gen_sep_hardness: k must be at least 3");
    int n = g.order();
    if (n < 1)
        throw std::invalid_argument("gen_sep_hardness: empty input graph");
    std::vector<std::pair<int, int>> pairs;
    if (single) {
        auto [i, j] = *single;
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("gen_sep_hardness: pair out of range");
        pairs.push_back(*single);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                pairs.emplace_back(i, j);
    }
    int block = 2 * n + 6;
    int blocks = static_cast<int>(pairs.size());
    int u = blocks * block, v = u + 1, w0 = v + 1;
    GraphBuilder b(w0 + k - 3);

    auto left = [&](int t) {
        std::vector<int> out;
        for (int x = 0; x < n; ++x)
            out.push_back(t * block + x);
        for (int z = 0; z < 3; ++z)
            out.push_back(t * block + 2 * n + z);
        return out;
    };
    auto right = [&](int t) {
        std::vector<int> out;
        for (int x = 0; x < n; ++x)
            out.push_back(t * block + n + x);
        for (int z = 0; z < 3; ++z)
            out.push_back(t * block + 2 * n + 3 + z);
        return out;
    };

    for (int t = 0; t < blocks; ++t) {
        int base = t * block;
        auto [i, j] = pairs[static_cast<std::size_t>(t)];
        for (int x = 0; x < n; ++x) {
            b.add_edge(base + x, base + n + x);
            for (int y = x + 1; y < n; ++y)
                if (!g.has_edge(x, y)) {
                    b.add_edge(base + x, base + y);
                    b.add_edge(base + n + x, base + n + y);
                }
        }
        b.join({base + i}, right(t));
        b.join({base + n + j}, left(t));
        if (t + 1 < blocks)
            b.join(right(t), left(t + 1));
    }
    b.join({u}, left(0));
    b.join({v}, right(blocks - 1));
    for (int w = w0; w < w0 + k - 3; ++w) {
        b.add_edge(u, w);
        b.add_edge(v, w);
    }
    return {b.build(), u, v};
}

namespace detail {

inline std::uint64_t below(std::mt19937_64& eng, std::uint64_t bound) { return eng() % bound; }

} // namespace detail

/// Random connected chordal graph: vertex i attaches to a random subset,
/// containing u, of the clique formed by a random earlier vertex u and its
/// own attachment set. Cliques have at most max_clique vertices.
inline Graph gen_chordal(int n, std::uint64_t seed, int max_clique = 4)
{
    if (n < 0)
        throw std::invalid_argument("gen_chordal: negative vertex count");
    if (max_clique < 2)
        throw std::invalid_argument("gen_chordal: max_clique must be at least 2");
    std::mt19937_64 eng(seed);
    GraphBuilder b(n);
    std::vector<std::vector<int>> attach(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        int u = static_cast<int>(detail::below(eng, static_cast<std::uint64_t>(i)));
        std::vector<int> nb{u};
        for (int x : attach[static_cast<std::size_t>(u)])
            if (static_cast<int>(nb.size()) < max_clique - 1 && (eng() & 1))
                nb.push_back(x);
        for (int x : nb)
            b.add_edge(i, x);
        attach[static_cast<std::size_t>(i)] = std::move(nb);
    }
    Graph g = b.build();
    if (!is_chordal(g))
        throw std::logic_error("gen_chordal: output is not chordal");
    return g;
}

/// Each pair u < v (in order) becomes an edge when a 53-bit uniform draw is below p.
inline Graph gen_random(int n, double p, std::uint64_t seed)
{
    if (n < 0)
        throw std::invalid_argument("gen_random: negative vertex count");
    std::mt19937_64 eng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(eng() >> 11) * 0x1.0p-53 < p)
                b.add_edge(u, v);
    return b.build();
}

} // namespace tia

#endif
