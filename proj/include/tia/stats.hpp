#ifndef TIA_STATS_HPP
#define TIA_STATS_HPP

#include <atomic>
#include <ostream>

namespace tia {

/// Counters filled in by the solvers when a stats object is supplied.
struct SolverStats {
    std::atomic<long> lp_calls{0};
    std::atomic<long> lp_pivots{0};
    std::atomic<long> branch_nodes{0};
    std::atomic<long> bounded_calls{0};
    std::atomic<long> bag_guesses{0};
    std::atomic<long> balanced_calls{0};
    std::atomic<long> balanced_guesses{0};
    std::atomic<long> balanced_splits_checked{0};
    std::atomic<long> decompose_nodes{0};
};

inline void bump(std::atomic<long>* counter, long by = 1)
{
    if (counter)
        counter->fetch_add(by, std::memory_order_relaxed);
}

inline std::ostream& operator<<(std::ostream& out, const SolverStats& s)
{
    return out << "lp_calls=" << s.lp_calls << " lp_pivots=" << s.lp_pivots
               << " branch_nodes=" << s.branch_nodes << " bounded_calls=" << s.bounded_calls
               << " bag_guesses=" << s.bag_guesses << " balanced_calls=" << s.balanced_calls
               << " balanced_guesses=" << s.balanced_guesses
               << " balanced_splits_checked=" << s.balanced_splits_checked
               << " decompose_nodes=" << s.decompose_nodes;
}

} // namespace tia

#endif
