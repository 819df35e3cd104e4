#ifndef TIA_SEPARATOR_HPP
#define TIA_SEPARATOR_HPP

#include "tia/graph.hpp"
#include "tia/rational_lp.hpp"
#include "tia/stats.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tia {

/// Partial 3-way separator instance: find a (V1,V2,V3)-separator S with
/// s0 ⊆ S ⊆ s0 ∪ r. The graph is referenced, not owned.
struct SeparatorInstance {
    std::reference_wrapper<const Graph> graph;
    std::array<VertexSet, 3> terminals;
    VertexSet s0;
    VertexSet r;
    int k = 0;

    SeparatorInstance(const Graph& g, std::array<VertexSet, 3> t, VertexSet s0_, VertexSet r_, int k_)
        : graph(g), terminals(std::move(t)), s0(std::move(s0_)), r(std::move(r_)), k(k_)
    {
    }

    SeparatorInstance(Graph&&, std::array<VertexSet, 3>, VertexSet, VertexSet, int) = delete;

    const Graph& g() const noexcept { return graph.get(); }

    VertexSet terminal_union() const { return terminals[0] | terminals[1] | terminals[2]; }

    std::vector<VertexSet> terminal_parts() const { return {terminals[0], terminals[1], terminals[2]}; }

    /// Throws unless all five sets live in the graph's universe and are pairwise disjoint.
    void check_well_formed() const
    {
        int n = g().order();
        std::array<const VertexSet*, 5> sets{&terminals[0], &terminals[1], &terminals[2], &s0, &r};
        for (auto* s : sets)
            if (s->universe() != n)
                throw std::invalid_argument("SeparatorInstance: set universe mismatch");
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                if (sets[i]->intersects(*sets[j]))
                    throw std::invalid_argument("SeparatorInstance: sets are not pairwise disjoint");
        if (k < 0)
            throw std::invalid_argument("SeparatorInstance: negative k");
    }
};

/// Found(s) or NoWitness (no solution with alpha <= k exists).
struct SeparatorResult {
    std::optional<VertexSet> separator;

    bool found() const noexcept { return separator.has_value(); }

    static SeparatorResult no_witness() { return {}; }
    static SeparatorResult found_with(VertexSet s) { return {std::move(s)}; }
};

/// Terminals that overlap or touch each other admit no separator.
inline bool terminals_adjacent(const Graph& g, const std::array<VertexSet, 3>& t)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.closed_neighborhood(t[i]).intersects(t[j]))
                return true;
    return false;
}

/// The checks every solver applies first: alpha(s0) <= k and non-adjacent terminals.
inline bool trivially_infeasible(const SeparatorInstance& inst)
{
    return terminals_adjacent(inst.g(), inst.terminals) || alpha(inst.g(), inst.s0) > inst.k;
}

/// Replaces each V_i by everything it reaches in g - (r ∪ s0); nullopt when
/// two of these closures meet, in which case no solution exists.
inline std::optional<SeparatorInstance> normalize(const SeparatorInstance& inst)
{
    const Graph& g = inst.g();
    VertexSet open = (inst.r | inst.s0).complement();
    SeparatorInstance out = inst;
    VertexSet seen(g.order());
    for (int i = 0; i < 3; ++i) {
        VertexSet closure = reachable(g, inst.terminals[static_cast<std::size_t>(i)], open);
        if (closure.intersects(seen))
            return std::nullopt;
        seen |= closure;
        out.terminals[static_cast<std::size_t>(i)] = std::move(closure);
    }
    return out;
}

/// Variable j of the LP stands for vertex vertex_of_var[j].
struct SeparatorLp {
    LinearProgram lp;
    std::vector<int> vertex_of_var;
};

/// Separator LP for a normalized instance with r ⊆ N(V1 ∪ V2 ∪ V3):
/// x_v = 1 on s0, x_a + x_b >= 1 on connected pairs (x_v >= 1 when a == b),
/// sum over I <= k for every independent I ⊆ r ∪ s0 of size 2k+1, 0 <= x <= 1,
/// minimizing sum x_v.
inline SeparatorLp build_lp(const SeparatorInstance& inst)
{
    const Graph& g = inst.g();
    int n = g.order();
    VertexSet cand = inst.r | inst.s0;
    SeparatorLp out;
    std::vector<int> var_of(static_cast<std::size_t>(n), -1);
    for (int v : cand) {
        var_of[static_cast<std::size_t>(v)] = out.lp.add_variable(1, 1);
        out.vertex_of_var.push_back(v);
    }
    auto var = [&](int v) { return var_of[static_cast<std::size_t>(v)]; };

    for (int v : inst.s0)
        out.lp.add_constraint({{var(v), 1}}, Relation::equal, 1);

    std::array<VertexSet, 3> boundary;
    for (int i = 0; i < 3; ++i)
        boundary[static_cast<std::size_t>(i)] = g.neighborhood(inst.terminals[static_cast<std::size_t>(i)]) & cand;

    // Sides of each boundary vertex, as a bitmask over {1,2,3}.
    auto sides = [&](int v) {
        int m = 0;
        for (int i = 0; i < 3; ++i)
            if (boundary[static_cast<std::size_t>(i)].contains(v))
                m |= 1 << i;
        return m;
    };

    VertexSet all_boundary = boundary[0] | boundary[1] | boundary[2];
    for (int v : all_boundary) {
        int m = sides(v);
        if (m & (m - 1))
            out.lp.add_constraint({{var(v), 1}}, Relation::greater_equal, 1);
    }

    VertexSet open = cand.complement();
    std::set<std::pair<int, int>> pairs;
    for (int a : all_boundary) {
        int ma = sides(a);
        VertexSet reach = reachable(g, VertexSet(n, {a}), open);
        VertexSet targets = g.neighborhood(reach) & all_boundary;
        for (int b : targets) {
            if (b == a)
                continue;
            int mb = sides(b);
            // Connected when a sits next to some V_i and b next to some V_j, i != j.
            bool distinct = false;
            for (int i = 0; i < 3 && !distinct; ++i)
                for (int j = 0; j < 3 && !distinct; ++j)
                    distinct = i != j && (ma >> i & 1) && (mb >> j & 1);
            if (distinct)
                pairs.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (auto [a, b] : pairs)
        out.lp.add_constraint({{var(a), 1}, {var(b), 1}}, Relation::greater_equal, 1);

    for_each_independent_set(g, cand, 2 * inst.k + 1, [&](const VertexSet& indep) {
        std::vector<LinearProgram::Term> terms;
        for (int v : indep)
            terms.push_back({var(v), 1});
        out.lp.add_constraint(std::move(terms), Relation::less_equal, inst.k);
        return true;
    });
    return out;
}

/// LP-rounding 2-approximation for instances with r ⊆ N(V1 ∪ V2 ∪ V3).
/// Found(S) has alpha(S) <= 2k; NoWitness means no solution with alpha <= k.
inline SeparatorResult lp_separator(const SeparatorInstance& inst, SolverStats* stats = nullptr)
{
    inst.check_well_formed();
    const Graph& g = inst.g();
    if (trivially_infeasible(inst))
        return SeparatorResult::no_witness();
    auto norm = normalize(inst);
    if (!norm)
        return SeparatorResult::no_witness();
    if (!norm->r.is_subset_of(g.neighborhood(norm->terminal_union())))
        throw std::invalid_argument("lp_separator: r is not contained in N(V1 ∪ V2 ∪ V3)");

    auto sep_lp = build_lp(*norm);
    bump(stats ? &stats->lp_calls : nullptr);
    auto sol = simplex_solve(sep_lp.lp);
    bump(stats ? &stats->lp_pivots : nullptr, sol.pivots);
    if (!sol.feasible)
        return SeparatorResult::no_witness();

    const Rational half(1, 2);
    VertexSet s = inst.s0;
    for (std::size_t j = 0; j < sol.x.size(); ++j)
        if (sol.x[j] >= half)
            s.insert(sep_lp.vertex_of_var[j]);

    if (!inst.s0.is_subset_of(s) || !s.is_subset_of(inst.s0 | inst.r))
        throw std::logic_error("lp_separator: rounded set escapes s0 ∪ r");
    if (!is_separator(g, s, norm->terminal_parts()))
        throw std::logic_error("lp_separator: rounded set does not separate");
    if (alpha(g, s) > 2 * inst.k)
        throw std::logic_error("lp_separator: rounded set has alpha above 2k");
    return SeparatorResult::found_with(std::move(s));
}

} // namespace tia

#endif
