#ifndef TIA_TREE_DECOMPOSITION_HPP
#define TIA_TREE_DECOMPOSITION_HPP

#include "tia/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tia {

/// Raised when the node/edge structure of a decomposition is not a tree.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tree of bags over the vertices of a graph with `universe` vertices.
struct TreeDecomposition {
    int universe = 0;
    std::vector<VertexSet> bags;
    std::vector<Edge> tree_edges;
    std::optional<int> root;

    TreeDecomposition() = default;

    explicit TreeDecomposition(int n) : universe(n) {}

    /// One node whose bag is all of V(G).
    static TreeDecomposition single_bag(int n)
    {
        TreeDecomposition td(n);
        td.bags.push_back(VertexSet::full(n));
        td.root = 0;
        return td;
    }

    int node_count() const noexcept { return static_cast<int>(bags.size()); }

    int add_node(VertexSet bag)
    {
        if (bag.universe() != universe)
            throw std::invalid_argument("TreeDecomposition: bag universe mismatch");
        bags.push_back(std::move(bag));
        return node_count() - 1;
    }

    void add_edge(int a, int b) { tree_edges.emplace_back(a, b); }

    std::vector<std::vector<int>> adjacency() const
    {
        std::vector<std::vector<int>> adj(bags.size());
        for (auto [a, b] : tree_edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& l : adj)
            std::sort(l.begin(), l.end());
        return adj;
    }

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Throws StructuralError unless the nodes and tree edges form a tree.
inline void check_tree(const TreeDecomposition& td)
{
    int t = td.node_count();
    if (t < 1)
        throw StructuralError("decomposition has no nodes");
    if (static_cast<int>(td.tree_edges.size()) != t - 1)
        throw StructuralError("decomposition with " + std::to_string(t) + " nodes has " +
                              std::to_string(td.tree_edges.size()) + " tree edges");
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= t || b >= t)
            throw StructuralError("tree edge endpoint out of range");
        if (a == b)
            throw StructuralError("tree edge is a loop");
    }
    auto adj = td.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(t), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != t)
        throw StructuralError("tree edges do not connect all nodes");
    if (td.root && (*td.root < 0 || *td.root >= t))
        throw StructuralError("root out of range");
    for (const auto& bag : td.bags)
        if (bag.universe() != td.universe)
            throw StructuralError("bag universe mismatch");
}

struct Violation {
    enum class Kind { vertex_missing, edge_uncovered, disconnected_trace };
    Kind kind;
    std::vector<int> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline const char* to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::vertex_missing:
        return "vertex-missing";
    case Violation::Kind::edge_uncovered:
        return "edge-uncovered";
    case Violation::Kind::disconnected_trace:
        return "disconnected-trace";
    }
    return "?";
}

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks vertex coverage, edge coverage and connected traces, collecting
/// every violation. Structural problems raise StructuralError instead.
inline ValidationReport validate(const Graph& g, const TreeDecomposition& td)
{
    if (td.universe != g.order())
        throw std::invalid_argument("validate: decomposition universe " +
                                    std::to_string(td.universe) + " != graph order " +
                                    std::to_string(g.order()));
    check_tree(td);
    ValidationReport rep;
    auto adj = td.adjacency();
    int t = td.node_count();
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> holders;
        for (int x = 0; x < t; ++x)
            if (td.bags[static_cast<std::size_t>(x)].contains(v))
                holders.push_back(x);
        if (holders.empty()) {
            rep.violations.push_back({Violation::Kind::vertex_missing, {v}});
            continue;
        }
        std::vector<char> seen(static_cast<std::size_t>(t), 0);
        std::vector<int> stack{holders.front()};
        seen[static_cast<std::size_t>(holders.front())] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)] && td.bags[static_cast<std::size_t>(y)].contains(v)) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != holders.size())
            rep.violations.push_back({Violation::Kind::disconnected_trace, {v}});
    }
    for (auto [u, v] : g.edges()) {
        bool covered = std::any_of(td.bags.begin(), td.bags.end(), [&](const VertexSet& b) {
            return b.contains(u) && b.contains(v);
        });
        if (!covered)
            rep.violations.push_back({Violation::Kind::edge_uncovered, {u, v}});
    }
    rep.ok = rep.violations.empty();
    return rep;
}

inline void require_valid(const Graph& g, const TreeDecomposition& td, const char* who)
{
    auto rep = validate(g, td);
    if (!rep.ok)
        throw std::invalid_argument(std::string(who) + ": invalid tree decomposition (" +
                                    to_string(rep.violations.front().kind) + ")");
}

/// max over bags of alpha(bag).
inline int td_alpha(const Graph& g, const TreeDecomposition& td)
{
    int best = 0;
    for (const auto& bag : td.bags)
        best = std::max(best, alpha(g, bag));
    return best;
}

/// For every tree edge ab: the separator X_a ∩ X_b and the vertices outside
/// it that appear in bags on a's side (side_a) and on b's side (side_b).
struct EdgeSides {
    int a = 0, b = 0;
    VertexSet sep, side_a, side_b;
};

inline std::vector<EdgeSides> edge_sides(const TreeDecomposition& td)
{
    int t = td.node_count();
    auto adj = td.adjacency();
    std::vector<int> parent(static_cast<std::size_t>(t), -1), order;
    order.reserve(static_cast<std::size_t>(t));
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<std::size_t>(t), 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
    }
    // below[x]: union of bags in the subtree of x; above[x]: union of all other bags.
    std::vector<VertexSet> below(td.bags), above(static_cast<std::size_t>(t), VertexSet(td.universe));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int p = parent[static_cast<std::size_t>(*it)];
        if (p >= 0)
            below[static_cast<std::size_t>(p)] |= below[static_cast<std::size_t>(*it)];
    }
    for (int x : order) {
        std::vector<int> kids;
        for (int y : adj[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] == x)
                kids.push_back(y);
        std::vector<VertexSet> suffix(kids.size() + 1, VertexSet(td.universe));
        for (std::size_t i = kids.size(); i-- > 0;)
            suffix[i] = suffix[i + 1] | below[static_cast<std::size_t>(kids[i])];
        VertexSet prefix = above[static_cast<std::size_t>(x)] | td.bags[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < kids.size(); ++i) {
            above[static_cast<std::size_t>(kids[i])] = prefix | suffix[i + 1];
            prefix |= below[static_cast<std::size_t>(kids[i])];
        }
    }
    std::vector<EdgeSides> out;
    out.reserve(td.tree_edges.size());
    for (auto [a, b] : td.tree_edges) {
        EdgeSides e;
        e.a = a;
        e.b = b;
        e.sep = td.bags[static_cast<std::size_t>(a)] & td.bags[static_cast<std::size_t>(b)];
        // Orient relative to the rooted tree: exactly one endpoint is the child.
        bool b_child = parent[static_cast<std::size_t>(b)] == a;
        int child = b_child ? b : a;
        VertexSet child_side = below[static_cast<std::size_t>(child)] - e.sep;
        VertexSet parent_side = above[static_cast<std::size_t>(child)] - e.sep;
        e.side_b = b_child ? child_side : parent_side;
        e.side_a = b_child ? parent_side : child_side;
        out.push_back(std::move(e));
    }
    return out;
}

namespace detail {

/// Lowest-id node with no outgoing edge; heads[e] is the node edge e points to.
inline int sink_node(int t, const std::vector<EdgeSides>& sides, const std::vector<int>& heads)
{
    std::vector<int> outdeg(static_cast<std::size_t>(t), 0);
    for (std::size_t e = 0; e < sides.size(); ++e) {
        int tail = heads[e] == sides[e].a ? sides[e].b : sides[e].a;
        ++outdeg[static_cast<std::size_t>(tail)];
    }
    for (int x = 0; x < t; ++x)
        if (outdeg[static_cast<std::size_t>(x)] == 0)
            return x;
    throw std::logic_error("orientation of a tree without a sink");
}

inline void cover_rec(const TreeDecomposition& td, const std::vector<EdgeSides>& sides,
                      const VertexSet& w, std::vector<int>& out)
{
    for (const auto& e : sides)
        if (e.side_a.intersects(w) && e.side_b.intersects(w)) {
            cover_rec(td, sides, w & e.side_a, out);
            cover_rec(td, sides, w & e.side_b, out);
            out.push_back(e.a);
            return;
        }
    for (const auto& e : sides)
        if (!e.side_a.intersects(w) && !e.side_b.intersects(w)) {
            out.push_back(e.a);
            return;
        }
    std::vector<int> heads;
    heads.reserve(sides.size());
    for (const auto& e : sides)
        heads.push_back(e.side_b.intersects(w) ? e.b : e.a);
    int t = sink_node(td.node_count(), sides, heads);
    if (!w.is_subset_of(td.bags[static_cast<std::size_t>(t)]))
        throw std::logic_error("cover_by_bags: sink bag misses part of W");
    out.push_back(t);
}

} // namespace detail

/// Node ids (sorted, distinct) of at most 2*alpha(w)-1 bags whose union contains w.
inline std::vector<int> cover_by_bags(const Graph& g, const TreeDecomposition& td, const VertexSet& w)
{
    if (w.empty())
        throw std::invalid_argument("cover_by_bags: W must be nonempty");
    require_valid(g, td, "cover_by_bags");
    auto sides = edge_sides(td);
    std::vector<int> out;
    detail::cover_rec(td, sides, w, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Partition (S, C1, C2, C3) of V(G); parts may be empty.
struct BalancedSplit {
    VertexSet s;
    std::array<VertexSet, 3> parts;
};

/// Balanced split around a single bag of `td` with respect to the independent
/// set `indep`: S is a bag, and every pair of parts holds at least
/// |indep|/2 - alpha(S) members of `indep`.
inline BalancedSplit existential_split(const Graph& g, const TreeDecomposition& td, const VertexSet& indep)
{
    if (!is_independent(g, indep))
        throw std::invalid_argument("existential_split: set is not independent");
    require_valid(g, td, "existential_split");
    auto sides = edge_sides(td);
    int total = indep.size();
    std::vector<int> heads;
    heads.reserve(sides.size());
    for (const auto& e : sides) {
        if (2 * e.side_b.intersection_size(indep) > total)
            heads.push_back(e.b);
        else if (2 * e.side_a.intersection_size(indep) > total)
            heads.push_back(e.a);
        else
            heads.push_back(std::min(e.a, e.b));
    }
    int t = detail::sink_node(td.node_count(), sides, heads);

    BalancedSplit split;
    split.s = td.bags[static_cast<std::size_t>(t)];
    auto parts = components(g, split.s.complement());
    while (parts.size() >= 4) {
        std::stable_sort(parts.begin(), parts.end(), [&](const VertexSet& x, const VertexSet& y) {
            int cx = x.intersection_size(indep), cy = y.intersection_size(indep);
            if (cx != cy)
                return cx < cy;
            return x.first() < y.first();
        });
        parts[0] |= parts[1];
        parts.erase(parts.begin() + 1);
    }
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.first() < y.first(); });
    for (std::size_t i = 0; i < 3; ++i)
        split.parts[i] = i < parts.size() ? parts[i] : VertexSet(g.order());
    return split;
}

/// Adds vertex v to every bag; the universe grows to include v if needed.
inline TreeDecomposition extend_with_vertex(const TreeDecomposition& td, int v)
{
    if (v < 0)
        throw std::invalid_argument("extend_with_vertex: negative vertex id");
    for (const auto& bag : td.bags)
        if (bag.contains(v))
            throw std::invalid_argument("extend_with_vertex: vertex already in a bag");
    TreeDecomposition out(std::max(td.universe, v + 1));
    out.tree_edges = td.tree_edges;
    out.root = td.root;
    for (const auto& bag : td.bags) {
        VertexSet b = bag.resized(out.universe);
        b.insert(v);
        out.bags.push_back(std::move(b));
    }
    return out;
}

/// Contracts tree edges whose one bag contains the other until none remain.
/// The surviving node keeps the larger bag; node ids are compacted in order.
inline TreeDecomposition prune(const TreeDecomposition& td)
{
    check_tree(td);
    int t = td.node_count();
    std::vector<int> rep(static_cast<std::size_t>(t));
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) {
        while (rep[static_cast<std::size_t>(x)] != x) {
            rep[static_cast<std::size_t>(x)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(x)])];
            x = rep[static_cast<std::size_t>(x)];
        }
        return x;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : td.tree_edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb)
                continue;
            const auto& ba = td.bags[static_cast<std::size_t>(ra)];
            const auto& bb = td.bags[static_cast<std::size_t>(rb)];
            bool a_in_b = ba.is_subset_of(bb), b_in_a = bb.is_subset_of(ba);
            if (a_in_b && b_in_a) {
                // Equal bags: keep the lower id.
                if (ra < rb)
                    rep[static_cast<std::size_t>(rb)] = ra;
                else
                    rep[static_cast<std::size_t>(ra)] = rb;
                changed = true;
            } else if (a_in_b) {
                rep[static_cast<std::size_t>(ra)] = rb;
                changed = true;
            } else if (b_in_a) {
                rep[static_cast<std::size_t>(rb)] = ra;
                changed = true;
            }
        }
    }
    std::vector<int> new_id(static_cast<std::size_t>(t), -1);
    TreeDecomposition out(td.universe);
    for (int x = 0; x < t; ++x)
        if (find(x) == x)
            new_id[static_cast<std::size_t>(x)] = out.add_node(td.bags[static_cast<std::size_t>(x)]);
    for (auto [a, b] : td.tree_edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb)
            out.add_edge(new_id[static_cast<std::size_t>(ra)], new_id[static_cast<std::size_t>(rb)]);
    }
    if (td.root)
        out.root = new_id[static_cast<std::size_t>(find(*td.root))];
    return out;
}

/// Intersects every bag with the induced vertex set, renumbers to local ids,
/// then prunes.
inline TreeDecomposition restrict_to(const TreeDecomposition& td, const InducedGraph& sub)
{
    TreeDecomposition out(sub.graph.order());
    for (const auto& bag : td.bags)
        out.add_node(sub.restrict(bag));
    out.tree_edges = td.tree_edges;
    out.root = td.root;
    return prune(out);
}

} // namespace tia

#endif
