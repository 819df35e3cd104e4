#ifndef TIA_SEPARATOR_SEARCH_HPP
#define TIA_SEPARATOR_SEARCH_HPP

#include "tia/separator.hpp"
#include "tia/tree_decomposition.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace tia {

/// The four instances moving v into V1, V2, V3 or S0, in that order.
inline std::array<SeparatorInstance, 4> branch_on(const SeparatorInstance& inst, int v)
{
    if (v < 0 || v >= inst.g().order() || !inst.r.contains(v))
        throw std::invalid_argument("branch_on: vertex not in r");
    std::array<SeparatorInstance, 4> out{inst, inst, inst, inst};
    for (auto& child : out)
        child.r.erase(v);
    for (std::size_t i = 0; i < 3; ++i)
        out[i].terminals[i].insert(v);
    out[3].s0.insert(v);
    return out;
}

/// r minus the neighbourhood of the terminals.
inline VertexSet far_part(const SeparatorInstance& inst)
{
    return inst.r - inst.g().neighborhood(inst.terminal_union());
}

/// alpha(r \ N(V1 ∪ V2 ∪ V3)).
inline int measure(const SeparatorInstance& inst) { return alpha(inst.g(), far_part(inst)); }

namespace detail {

/// True when g - (r ∪ s0) joins two terminal sets.
inline bool terminals_connected(const SeparatorInstance& inst)
{
    return !normalize(inst).has_value();
}

inline bool dead_node(const SeparatorInstance& inst)
{
    return trivially_infeasible(inst) || terminals_connected(inst);
}

/// k == 0: only the empty set can be a solution.
inline SeparatorResult solve_k0(const Graph& g, const std::array<VertexSet, 3>& t, const VertexSet& s0)
{
    if (!s0.empty() || terminals_adjacent(g, t))
        return SeparatorResult::no_witness();
    if (!is_separator(g, VertexSet(g.order()), {t[0], t[1], t[2]}))
        return SeparatorResult::no_witness();
    return SeparatorResult::found_with(VertexSet(g.order()));
}

class BoundedSearch {
public:
    BoundedSearch(int k, int root_alpha_r, SolverStats* stats)
        : k_(k), depth_cap_(root_alpha_r / k + 1), stats_(stats)
    {
    }

    SeparatorResult run(const SeparatorInstance& inst, int phase1_depth, int moves)
    {
        bump(stats_ ? &stats_->branch_nodes : nullptr);
        if (dead_node(inst))
            return SeparatorResult::no_witness();
        VertexSet far = far_part(inst);
        if (far.empty())
            return lp_separator(inst, stats_);

        int m = alpha(inst.g(), far);
        if (m >= 2 * k_)
            return phase1(inst, far, phase1_depth + 1);

        if (moves >= 2 * k_)
            throw std::logic_error("solve_bounded: phase-2 path exceeds 2k - 1 terminal moves");
        int v = far.first();
        auto kids = branch_on(inst, v);
        for (std::size_t b = 0; b < 4; ++b) {
            auto res = run(kids[b], phase1_depth, b < 3 ? moves + 1 : moves);
            if (res.found())
                return res;
        }
        return SeparatorResult::no_witness();
    }

private:
    SeparatorResult phase1(const SeparatorInstance& inst, const VertexSet& far, int depth)
    {
        if (depth > depth_cap_)
            throw std::logic_error("solve_bounded: phase-1 depth exceeds alpha(r)/k + 1");
        auto chosen = least_independent_set(inst.g(), far, 2 * k_);
        if (!chosen)
            throw std::logic_error("solve_bounded: measure and independent set disagree");
        std::vector<int> members = chosen->to_vector();
        std::size_t width = members.size();
        std::vector<int> digit(width, 0);
        // Digits count through V1, V2, V3, S0 with the first member most significant.
        for (;;) {
            int in_s0 = 0;
            for (int d : digit)
                in_s0 += d == 3;
            if (in_s0 <= k_) {
                SeparatorInstance child = inst;
                for (std::size_t i = 0; i < width; ++i) {
                    int v = members[i];
                    child.r.erase(v);
                    if (digit[i] == 3)
                        child.s0.insert(v);
                    else
                        child.terminals[static_cast<std::size_t>(digit[i])].insert(v);
                }
                auto res = run(child, depth, 0);
                if (res.found())
                    return res;
            }
            std::size_t pos = width;
            while (pos > 0 && digit[pos - 1] == 3)
                digit[--pos] = 0;
            if (pos == 0)
                break;
            ++digit[pos - 1];
        }
        return SeparatorResult::no_witness();
    }

    int k_;
    int depth_cap_;
    SolverStats* stats_;
};

inline void verify_found(const SeparatorInstance& inst, const VertexSet& s, const char* who)
{
    if (!inst.s0.is_subset_of(s) || !s.is_subset_of(inst.s0 | inst.r))
        throw std::logic_error(std::string(who) + ": separator escapes s0 ∪ r");
    if (!is_separator(inst.g(), s, inst.terminal_parts()))
        throw std::logic_error(std::string(who) + ": result does not separate");
    if (alpha(inst.g(), s) > 2 * inst.k)
        throw std::logic_error(std::string(who) + ": result has alpha above 2k");
}

} // namespace detail

/// Branching solver: Found(S) with alpha(S) <= 2k, or NoWitness certifying
/// that no solution with alpha <= k exists.
inline SeparatorResult solve_bounded(const SeparatorInstance& inst, SolverStats* stats = nullptr)
{
    inst.check_well_formed();
    bump(stats ? &stats->bounded_calls : nullptr);
    if (inst.k == 0) {
        auto res = detail::solve_k0(inst.g(), inst.terminals, inst.s0);
        if (res.found())
            detail::verify_found(inst, *res.separator, "solve_bounded");
        return res;
    }
    detail::BoundedSearch search(inst.k, alpha(inst.g(), inst.r), stats);
    auto res = search.run(inst, 0, 0);
    if (res.found())
        detail::verify_found(inst, *res.separator, "solve_bounded");
    return res;
}

/// Separator search guided by a tree decomposition: tries solve_bounded with
/// r = (union of up to 2k-1 bags) minus the terminals, smallest guesses first.
/// A nonempty s0 is supported by skipping guesses whose union misses it.
inline SeparatorResult solve_with_decomposition(const Graph& g, int k, const TreeDecomposition& td,
                                                const std::array<VertexSet, 3>& terminals,
                                                const VertexSet& s0, SolverStats* stats = nullptr)
{
    require_valid(g, td, "solve_with_decomposition");
    int n = g.order();
    VertexSet tu = terminals[0] | terminals[1] | terminals[2];
    SeparatorInstance probe(g, terminals, s0, (tu | s0).complement(), k);
    probe.check_well_formed();
    if (trivially_infeasible(probe))
        return SeparatorResult::no_witness();
    if (k == 0) {
        auto res = detail::solve_k0(g, terminals, s0);
        if (res.found())
            detail::verify_found(probe, *res.separator, "solve_with_decomposition");
        return res;
    }

    TreeDecomposition pruned = prune(td);
    int t = pruned.node_count();
    int max_pick = std::min(2 * k - 1, t);
    struct Key {
        VertexSet r;
        std::array<VertexSet, 3> v;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept
        {
            std::size_t h = key.r.hash();
            for (const auto& s : key.v)
                h = h * 1000003u ^ s.hash();
            return h;
        }
    };
    std::unordered_set<Key, KeyHash> tried;

    std::vector<int> pick;
    for (int size = 1; size <= max_pick; ++size) {
        pick.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet u(n);
            for (int b : pick)
                u |= pruned.bags[static_cast<std::size_t>(b)];
            if (s0.is_subset_of(u)) {
                VertexSet r = u - tu - s0;
                if (tried.insert(Key{r, terminals}).second) {
                    bump(stats ? &stats->bag_guesses : nullptr);
                    SeparatorInstance inst(g, terminals, s0, r, k);
                    auto res = solve_bounded(inst, stats);
                    if (res.found()) {
                        detail::verify_found(inst, *res.separator, "solve_with_decomposition");
                        return res;
                    }
                }
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == t - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return SeparatorResult::no_witness();
}

inline SeparatorResult solve_with_decomposition(const Graph& g, int k, const TreeDecomposition& td,
                                                const std::array<VertexSet, 3>& terminals,
                                                SolverStats* stats = nullptr)
{
    return solve_with_decomposition(g, k, td, terminals, VertexSet(g.order()), stats);
}

} // namespace tia

#endif
