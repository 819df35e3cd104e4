#ifndef TIA_DECOMPOSER_HPP
#define TIA_DECOMPOSER_HPP

#include "tia/separator_search.hpp"
#include "tia/tree_decomposition.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tia {

/// One balanced split as handed back by balanced_separator, with its inputs.
struct SplitEvent {
    const Graph& g;
    int k;
    const TreeDecomposition& td_in;
    const VertexSet& w;
    const VertexSet& indep;
    const BalancedSplit& split;
};

struct DecomposeOptions {
    /// Worker threads for the balanced-separator guesses; 1 is fully sequential.
    /// Results are identical for any value.
    int threads = 1;
    SolverStats* stats = nullptr;
    /// Called on the calling thread for every split that passed its checks.
    std::function<void(const SplitEvent&)> on_split;
};

/// Either a decomposition with alpha at most 8k or TooLarge, which certifies
/// that the tree-independence number exceeds k.
struct DecomposeResult {
    std::optional<TreeDecomposition> td;

    bool too_large() const noexcept { return !td.has_value(); }
};

namespace detail {

/// Assignments of the members of an independent set to S (0) or C1..C3 (1..3)
/// that keep at least 2k members in every union of two parts. Only one
/// representative per relabelling of the parts is kept (labels first appear
/// in increasing order), and at most k members go to S.
inline std::vector<std::vector<int>> split_guesses(int size, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> digit(static_cast<std::size_t>(size), 0);
    for (;;) {
        std::array<int, 4> count{};
        int next_label = 1;
        bool canonical = true;
        for (int d : digit) {
            ++count[static_cast<std::size_t>(d)];
            if (d >= 1) {
                if (d > next_label) {
                    canonical = false;
                    break;
                }
                if (d == next_label)
                    ++next_label;
            }
        }
        if (canonical && count[0] <= k && count[1] + count[2] >= 2 * k && count[1] + count[3] >= 2 * k &&
            count[2] + count[3] >= 2 * k)
            out.push_back(digit);
        int pos = size;
        while (pos > 0 && digit[static_cast<std::size_t>(pos - 1)] == 3)
            digit[static_cast<std::size_t>(--pos)] = 0;
        if (pos == 0)
            break;
        ++digit[static_cast<std::size_t>(pos - 1)];
    }
    return out;
}

inline const std::vector<std::vector<int>>& cached_split_guesses(int size, int k)
{
    static std::mutex lock;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard guard(lock);
    auto it = cache.find({size, k});
    if (it == cache.end())
        it = cache.emplace(std::pair{size, k}, split_guesses(size, k)).first;
    return it->second;
}

inline void check_split(const Graph& g, int k, const VertexSet& w, const VertexSet& indep, const BalancedSplit& split)
{
    auto fail = [](const std::string& what) { throw std::logic_error("balanced_separator: " + what); };
    VertexSet all = split.s;
    int empty_parts = 0;
    for (const auto& c : split.parts) {
        if (all.intersects(c))
            fail("parts overlap");
        all |= c;
        empty_parts += c.empty();
    }
    if (all != g.vertices())
        fail("parts do not cover the graph");
    if (empty_parts > 1)
        fail("more than one empty part");
    if (!is_separator(g, split.s, {split.parts[0], split.parts[1], split.parts[2]}))
        fail("parts are not separated");
    if (alpha(g, split.s) > 2 * k)
        fail("alpha(S) above 2k");
    for (const auto& c : split.parts)
        if (alpha(g, w & c) > 4 * k)
            fail("alpha(W ∩ C) above 4k");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if ((split.parts[static_cast<std::size_t>(i)] | split.parts[static_cast<std::size_t>(j)])
                    .intersection_size(indep) < 2 * k)
                fail("pair of parts holds fewer than 2k members of I");
}

} // namespace detail

/// Finds (S, C1, C2, C3) with alpha(S) <= 2k and alpha(W ∩ C_i) <= 4k, at
/// most one empty part, or returns nullopt (TooLarge) when no guess succeeds.
/// Requires alpha(W) == 6k.
inline std::optional<BalancedSplit> balanced_separator(const Graph& g, int k, const TreeDecomposition& td_in,
                                                       const VertexSet& w, const DecomposeOptions& opts = {})
{
    if (k < 1)
        throw std::invalid_argument("balanced_separator: k must be positive");
    if (alpha(g, w) != 6 * k)
        throw std::invalid_argument("balanced_separator: alpha(W) must equal 6k");
    require_valid(g, td_in, "balanced_separator");
    SolverStats* stats = opts.stats;
    bump(stats ? &stats->balanced_calls : nullptr);

    VertexSet indep = *least_independent_set(g, w, 6 * k);
    std::vector<int> members = indep.to_vector();
    const auto& guesses = detail::cached_split_guesses(static_cast<int>(members.size()), k);
    int n = g.order();

    auto terminals_of = [&](const std::vector<int>& digit) {
        std::array<VertexSet, 3> t{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (std::size_t i = 0; i < members.size(); ++i)
            if (digit[i] > 0)
                t[static_cast<std::size_t>(digit[i] - 1)].insert(members[i]);
        return t;
    };

    std::optional<VertexSet> found;
    std::size_t found_at = std::numeric_limits<std::size_t>::max();
    if (opts.threads <= 1) {
        for (std::size_t i = 0; i < guesses.size() && !found; ++i) {
            bump(stats ? &stats->balanced_guesses : nullptr);
            auto res = solve_with_decomposition(g, k, td_in, terminals_of(guesses[i]), stats);
            if (res.found()) {
                found = std::move(res.separator);
                found_at = i;
            }
        }
    } else {
        std::atomic<std::size_t> next{0}, best{std::numeric_limits<std::size_t>::max()};
        std::vector<std::optional<VertexSet>> slot(guesses.size());
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= guesses.size() || i > best.load())
                    return;
                bump(stats ? &stats->balanced_guesses : nullptr);
                auto res = solve_with_decomposition(g, k, td_in, terminals_of(guesses[i]), stats);
                if (res.found()) {
                    slot[i] = std::move(res.separator);
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        for (int t = 0; t < opts.threads; ++t)
            pool.emplace_back(worker);
        pool.clear();
        found_at = best.load();
        if (found_at < slot.size())
            found = std::move(slot[found_at]);
    }
    if (!found)
        return std::nullopt;

    auto guess_t = terminals_of(guesses[found_at]);
    BalancedSplit split;
    split.s = *found;
    split.parts = {VertexSet(n), VertexSet(n), VertexSet(n)};
    for (auto& comp : components(g, found->complement())) {
        std::size_t target = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (comp.intersects(guess_t[i])) {
                target = i;
                break;
            }
        split.parts[target] |= comp;
    }
    detail::check_split(g, k, w, indep, split);
    bump(stats ? &stats->balanced_splits_checked : nullptr);
    if (opts.on_split)
        opts.on_split(SplitEvent{g, k, td_in, w, indep, split});
    return split;
}

namespace detail {

class Recursion {
public:
    Recursion(int k, const DecomposeOptions& opts) : k_(k), opts_(opts) {}

    /// Rooted at node 0 with w inside the root bag, or nullopt for TooLarge.
    std::optional<TreeDecomposition> run(const Graph& g, const TreeDecomposition& td_in, const VertexSet& w)
    {
        bump(opts_.stats ? &opts_.stats->decompose_nodes : nullptr);
        int n = g.order();
        if (alpha(g, g.vertices()) <= 6 * k_) {
            auto td = TreeDecomposition::single_bag(n);
            td.root = 0;
            return td;
        }
        VertexSet padded = w;
        int a = alpha(g, padded);
        for (int v = 0; v < n && a < 6 * k_; ++v) {
            if (padded.contains(v))
                continue;
            padded.insert(v);
            a = alpha(g, padded);
        }
        auto split = balanced_separator(g, k_, td_in, padded, opts_);
        if (!split)
            return std::nullopt;

        TreeDecomposition out(n);
        out.add_node(split->s | padded);
        out.root = 0;
        VertexSet covered = split->s;
        std::vector<char> edge_covered;
        auto edges = g.edges();
        edge_covered.assign(edges.size(), 0);
        for (const auto& part : split->parts) {
            if (part.empty())
                continue;
            VertexSet x = part | split->s;
            covered |= x;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (x.contains(edges[e].first) && x.contains(edges[e].second))
                    edge_covered[e] = 1;

            auto sub = induced(g, x);
            VertexSet w_sub = sub.restrict((part & padded) | split->s);
            TreeDecomposition td_sub = restrict_to(td_in, sub);
            check_restriction(td_in, td_sub, sub);
            auto child = run(sub.graph, td_sub, w_sub);
            if (!child)
                return std::nullopt;
            const VertexSet& child_root = child->bags[0];
            if (!w_sub.is_subset_of(child_root))
                throw std::logic_error("decompose_rec: child root bag misses its W");
            int offset = out.node_count();
            for (const auto& bag : child->bags)
                out.add_node(sub.lift(bag, n));
            for (auto [a2, b2] : child->tree_edges)
                out.add_edge(a2 + offset, b2 + offset);
            out.add_edge(0, offset);
            if (!split->s.is_subset_of(out.bags[0] & out.bags[static_cast<std::size_t>(offset)]))
                throw std::logic_error("decompose_rec: S missing from a root or child bag");
        }
        if (covered != g.vertices())
            throw std::logic_error("decompose_rec: parts do not cover every vertex");
        for (char c : edge_covered)
            if (!c)
                throw std::logic_error("decompose_rec: parts do not cover every edge");
        return out;
    }

private:
    static void check_restriction(const TreeDecomposition& td_in, const TreeDecomposition& td_sub,
                                  const InducedGraph& sub)
    {
        require_valid(sub.graph, td_sub, "decompose_rec (restricted decomposition)");
        // Every restricted bag comes from an input bag, so alpha cannot grow.
        for (const auto& bag : td_sub.bags) {
            VertexSet lifted = sub.lift(bag, td_in.universe);
            bool inside = false;
            for (const auto& orig : td_in.bags)
                if (lifted.is_subset_of(orig)) {
                    inside = true;
                    break;
                }
            if (!inside)
                throw std::logic_error("decompose_rec: restricted bag not inside an input bag");
        }
    }

    int k_;
    DecomposeOptions opts_;
};

inline long node_bound(long n) { return 4 * n * n + 4 * n + 4; }

} // namespace detail

/// Rooted decomposition of g with alpha at most 8k and w inside the root bag,
/// or TooLarge. Requires alpha(W) <= 6k and a valid td_in for g.
inline DecomposeResult decompose_rec(const Graph& g, int k, const TreeDecomposition& td_in, const VertexSet& w,
                                     const DecomposeOptions& opts = {})
{
    if (k < 1)
        throw std::invalid_argument("decompose_rec: k must be positive");
    if (w.universe() != g.order())
        throw std::invalid_argument("decompose_rec: W universe mismatch");
    if (alpha(g, w) > 6 * k)
        throw std::invalid_argument("decompose_rec: alpha(W) exceeds 6k");
    require_valid(g, td_in, "decompose_rec");

    detail::Recursion rec(k, opts);
    auto td = rec.run(g, td_in, w);
    if (!td)
        return {};
    require_valid(g, *td, "decompose_rec (output)");
    if (td_alpha(g, *td) > 8 * k)
        throw std::logic_error("decompose_rec: output alpha exceeds 8k");
    if (!w.is_subset_of(td->bags[0]))
        throw std::logic_error("decompose_rec: W not in the root bag");
    if (td->node_count() > detail::node_bound(g.order()))
        throw std::logic_error("decompose_rec: node count above 4n^2 + 4n + 4");
    return {std::move(td)};
}

/// Iterative compression over the vertices in id order: either a decomposition
/// with alpha at most 8k (rooted at node 0), or TooLarge.
inline DecomposeResult decompose(const Graph& g, int k, const DecomposeOptions& opts = {})
{
    if (k < 1)
        throw std::invalid_argument("decompose: k must be positive");
    int n = g.order();
    TreeDecomposition td = TreeDecomposition::single_bag(0);
    td.root = 0;
    for (int i = 0; i < n; ++i) {
        auto prefix = induced(g, VertexSet::prefix(n, i + 1));
        td = extend_with_vertex(td, i);
        if (td_alpha(prefix.graph, td) > 8 * k + 1)
            throw std::logic_error("decompose: extended decomposition alpha above 8k + 1");
        auto step = decompose_rec(prefix.graph, k, td, VertexSet(i + 1), opts);
        if (step.too_large())
            return {};
        td = std::move(*step.td);
    }
    return {std::move(td)};
}

} // namespace tia

#endif
