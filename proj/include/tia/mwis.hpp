#ifndef TIA_MWIS_HPP
#define TIA_MWIS_HPP

#include "tia/tree_decomposition.hpp"

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tia {

struct MwisResult {
    long long weight = 0;
    VertexSet set;
};

/// Maximum-weight independent set by dynamic programming over the independent
/// subsets of each bag. The tree is rooted at td.root, or node 0 if unset.
inline MwisResult mwis_dp(const Graph& g, const TreeDecomposition& td, const std::vector<long long>& weights)
{
    require_valid(g, td, "mwis_dp");
    int n = g.order();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("mwis_dp: one weight per vertex required");
    int t = td.node_count();
    int root = td.root.value_or(0);
    auto adj = td.adjacency();

    std::vector<int> parent(static_cast<std::size_t>(t), -1), order{root};
    std::vector<std::vector<int>> children(static_cast<std::size_t>(t));
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (int y : adj[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                children[static_cast<std::size_t>(x)].push_back(y);
                order.push_back(y);
            }
    }

    auto weight_of = [&](const VertexSet& s) {
        long long w = 0;
        for (int v : s)
            w += weights[static_cast<std::size_t>(v)];
        return w;
    };

    struct State {
        VertexSet set;
        long long value = 0;
        std::vector<std::size_t> pick;
    };
    std::vector<std::vector<State>> table(static_cast<std::size_t>(t));
    // For each child c and each set K ⊆ X_c ∩ X_parent: best child state index
    // whose trace on the parent bag is K.
    std::vector<std::unordered_map<VertexSet, std::size_t, VertexSetHash>> best_by_key(static_cast<std::size_t>(t));

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        const VertexSet& bag = td.bags[static_cast<std::size_t>(x)];
        auto& states = table[static_cast<std::size_t>(x)];
        std::vector<int> members = bag.to_vector();
        VertexSet cur(n);
        auto enumerate = [&](auto&& self, std::size_t i) -> void {
            if (i == members.size()) {
                State s{cur, weight_of(cur), {}};
                for (int c : children[static_cast<std::size_t>(x)]) {
                    VertexSet key = cur & td.bags[static_cast<std::size_t>(c)];
                    const auto& lookup = best_by_key[static_cast<std::size_t>(c)];
                    std::size_t idx = lookup.at(key);
                    const State& cs = table[static_cast<std::size_t>(c)][idx];
                    s.value += cs.value - weight_of(key);
                    s.pick.push_back(idx);
                }
                states.push_back(std::move(s));
                return;
            }
            int v = members[i];
            if (!g.neighbors(v).intersects(cur)) {
                cur.insert(v);
                self(self, i + 1);
                cur.erase(v);
            }
            self(self, i + 1);
        };
        enumerate(enumerate, 0);

        if (x != root) {
            const VertexSet& pbag = td.bags[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            auto& lookup = best_by_key[static_cast<std::size_t>(x)];
            for (std::size_t i = 0; i < states.size(); ++i) {
                VertexSet key = states[i].set & pbag;
                auto [pos, inserted] = lookup.emplace(key, i);
                if (!inserted && states[i].value > states[pos->second].value)
                    pos->second = i;
            }
        }
    }

    const auto& top = table[static_cast<std::size_t>(root)];
    std::size_t best = 0;
    for (std::size_t i = 1; i < top.size(); ++i)
        if (top[i].value > top[best].value)
            best = i;

    MwisResult out{top[best].value, VertexSet(n)};
    std::vector<std::pair<int, std::size_t>> stack{{root, best}};
    while (!stack.empty()) {
        auto [x, idx] = stack.back();
        stack.pop_back();
        const State& s = table[static_cast<std::size_t>(x)][idx];
        out.set |= s.set;
        const auto& kids = children[static_cast<std::size_t>(x)];
        for (std::size_t c = 0; c < kids.size(); ++c)
            stack.emplace_back(kids[c], s.pick[c]);
    }
    if (!is_independent(g, out.set) || weight_of(out.set) != out.weight)
        throw std::logic_error("mwis_dp: reconstructed set disagrees with the table");
    return out;
}

} // namespace tia

#endif
