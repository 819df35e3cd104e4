#ifndef TIA_ORACLES_HPP
#define TIA_ORACLES_HPP

#include "tia/graph.hpp"
#include "tia/separator.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tia {

inline constexpr int exact_tree_alpha_cap = 9;
inline constexpr int supergraph_cross_check_cap = 6;
inline constexpr int exact_separator_cap = 20;
inline constexpr int exact_mwis_cap = 24;

namespace detail {

/// alpha of every vertex subset, indexed by bitmask.
inline std::vector<int> subset_alphas(const Graph& g)
{
    int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    std::vector<int> a(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = __builtin_ctz(mask);
        std::uint32_t without = mask & ~(1u << v);
        a[mask] = std::max(a[without], 1 + a[without & ~adj[static_cast<std::size_t>(v)]]);
    }
    return a;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    return adj;
}

} // namespace detail

/// Exact tree-independence number: minimum over elimination orderings of the
/// largest alpha (in g) of a vertex together with its later fill neighbours.
inline int exact_tree_alpha(const Graph& g)
{
    int n = g.order();
    if (n > exact_tree_alpha_cap)
        throw std::invalid_argument("exact_tree_alpha: more than 9 vertices");
    if (n == 0)
        return 0;
    auto a = detail::subset_alphas(g);
    auto adj0 = detail::adjacency_masks(g);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n + 1;
    do {
        auto adj = adj0;
        std::uint32_t remaining = (1u << n) - 1;
        int worst = 0;
        for (int v : order) {
            std::uint32_t later = adj[static_cast<std::size_t>(v)] & remaining & ~(1u << v);
            worst = std::max(worst, a[later | (1u << v)]);
            if (worst >= best)
                break;
            for (std::uint32_t m = later; m; m &= m - 1) {
                int u = __builtin_ctz(m);
                adj[static_cast<std::size_t>(u)] |= later & ~(1u << u);
            }
            remaining &= ~(1u << v);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Same quantity by enumerating every chordal supergraph of g: the minimum
/// over them of the largest alpha (in g) of a clique. Only for n <= 6.
inline int exact_tree_alpha_by_supergraphs(const Graph& g)
{
    int n = g.order();
    if (n > supergraph_cross_check_cap)
        throw std::invalid_argument("exact_tree_alpha_by_supergraphs: more than 6 vertices");
    if (n == 0)
        return 0;
    auto a = detail::subset_alphas(g);
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                missing.emplace_back(u, v);
    int best = n + 1;
    for (std::uint32_t pick = 0; pick < (1u << missing.size()); ++pick) {
        GraphBuilder b(n);
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        for (std::size_t i = 0; i < missing.size(); ++i)
            if (pick >> i & 1)
                b.add_edge(missing[i].first, missing[i].second);
        Graph h = b.build();
        if (!is_chordal(h))
            continue;
        auto hadj = detail::adjacency_masks(h);
        int worst = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            bool clique = true;
            for (std::uint32_t m = mask; m && clique; m &= m - 1) {
                int v = __builtin_ctz(m);
                clique = (mask & ~(1u << v) & ~hadj[static_cast<std::size_t>(v)]) == 0;
            }
            if (clique)
                worst = std::max(worst, a[mask]);
        }
        best = std::min(best, worst);
    }
    return best;
}

struct ExactSeparator {
    VertexSet s;
    int alpha = 0;
};

/// Minimum-alpha S with s0 ⊆ S ⊆ s0 ∪ r separating the terminals, or nullopt.
/// Ties go to the first subset of r in binary counting order over increasing ids.
inline std::optional<ExactSeparator> exact_separator(const SeparatorInstance& inst)
{
    inst.check_well_formed();
    std::vector<int> r = inst.r.to_vector();
    if (r.size() > static_cast<std::size_t>(exact_separator_cap))
        throw std::invalid_argument("exact_separator: r has more than 20 vertices");
    const Graph& g = inst.g();
    auto parts = inst.terminal_parts();
    std::optional<ExactSeparator> best;
    for (std::uint32_t mask = 0; mask < (1u << r.size()); ++mask) {
        VertexSet s = inst.s0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (mask >> i & 1)
                s.insert(r[i]);
        if (!is_separator(g, s, parts))
            continue;
        int a = alpha(g, s);
        if (!best || a < best->alpha)
            best = ExactSeparator{s, a};
    }
    return best;
}

/// Maximum-weight independent set by exhaustive search. Among optimal sets the
/// one preferring lower ids wins: compare membership of vertex 0, then 1, and
/// so on, taking the set that contains the first vertex where they differ.
inline VertexSet exact_mwis(const Graph& g, const std::vector<long long>& weights)
{
    int n = g.order();
    if (n > exact_mwis_cap)
        throw std::invalid_argument("exact_mwis: more than 24 vertices");
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("exact_mwis: one weight per vertex required");
    auto adj = detail::adjacency_masks(g);
    // Suffix sums of positive weights bound what the remaining vertices can add.
    std::vector<long long> bound(static_cast<std::size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v)
        bound[static_cast<std::size_t>(v)] =
            bound[static_cast<std::size_t>(v) + 1] + std::max(0LL, weights[static_cast<std::size_t>(v)]);

    long long best_w = 0;
    std::uint32_t best_set = 0;
    bool have = false;
    // Include-first DFS meets sets in exactly that preference order.
    auto rec = [&](auto&& self, int v, std::uint32_t cur, long long w) -> void {
        if (have && w + bound[static_cast<std::size_t>(v)] < best_w)
            return;
        if (v == n) {
            if (!have || w > best_w) {
                best_w = w;
                best_set = cur;
                have = true;
            }
            return;
        }
        if (!(adj[static_cast<std::size_t>(v)] & cur))
            self(self, v + 1, cur | (1u << v), w + weights[static_cast<std::size_t>(v)]);
        self(self, v + 1, cur, w);
    };
    rec(rec, 0, 0, 0);
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (best_set >> v & 1)
            out.insert(v);
    return out;
}

} // namespace tia

#endif
