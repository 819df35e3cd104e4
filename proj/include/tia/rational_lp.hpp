#ifndef TIA_RATIONAL_LP_HPP
#define TIA_RATIONAL_LP_HPP

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tia {

/// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

enum class Relation { less_equal, greater_equal, equal };

/// Minimize c.x subject to linear rows and 0 <= x_j <= upper_j.
class LinearProgram {
public:
    struct Term {
        int var;
        Rational coeff;
    };

    struct Constraint {
        std::vector<Term> terms;
        Relation rel;
        Rational rhs;
    };

    int add_variable(Rational cost, Rational upper = 1)
    {
        if (upper < 0)
            throw std::invalid_argument("LinearProgram: negative upper bound");
        cost_.push_back(std::move(cost));
        upper_.push_back(std::move(upper));
        return num_vars() - 1;
    }

    void add_constraint(std::vector<Term> terms, Relation rel, Rational rhs)
    {
        for (const auto& t : terms)
            if (t.var < 0 || t.var >= num_vars())
                throw std::out_of_range("LinearProgram: constraint references undeclared variable");
        rows_.push_back({std::move(terms), rel, std::move(rhs)});
    }

    int num_vars() const noexcept { return static_cast<int>(cost_.size()); }
    int num_constraints() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<Rational>& costs() const noexcept { return cost_; }
    const std::vector<Rational>& upper_bounds() const noexcept { return upper_; }
    const std::vector<Constraint>& constraints() const noexcept { return rows_; }

private:
    std::vector<Rational> cost_;
    std::vector<Rational> upper_;
    std::vector<Constraint> rows_;
};

struct LpSolution {
    bool feasible = false;
    std::vector<Rational> x;
    Rational objective;
    long pivots = 0;
};

namespace detail {

struct Bound {
    bool finite = false;
    Rational value;
};

/// Bounded dual simplex in dictionary form.
///
/// Every row i gets a logical variable s_i = a_i.x carrying the row's bounds,
/// so the initial basis is all logicals. Structurals start at whichever bound
/// makes their cost dual feasible, which always exists because every
/// structural is boxed. Leaving rows and entering columns are both chosen by
/// lowest variable index among the eligible candidates, which rules out cycling.
class DualSimplex {
public:
    explicit DualSimplex(const LinearProgram& lp)
        : n_(lp.num_vars()), m_(lp.num_constraints()), cost_(lp.costs())
    {
        lo_.resize(static_cast<std::size_t>(n_ + m_));
        hi_.resize(static_cast<std::size_t>(n_ + m_));
        for (int j = 0; j < n_; ++j) {
            lo_[j] = {true, 0};
            hi_[j] = {true, lp.upper_bounds()[static_cast<std::size_t>(j)]};
        }
        tab_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(n_)));
        for (int i = 0; i < m_; ++i) {
            const auto& row = lp.constraints()[static_cast<std::size_t>(i)];
            for (const auto& t : row.terms)
                tab_[i][static_cast<std::size_t>(t.var)] += t.coeff;
            auto& lo = lo_[static_cast<std::size_t>(n_ + i)];
            auto& hi = hi_[static_cast<std::size_t>(n_ + i)];
            if (row.rel != Relation::less_equal)
                lo = {true, row.rhs};
            if (row.rel != Relation::greater_equal)
                hi = {true, row.rhs};
        }
        basic_.resize(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i)
            basic_[i] = n_ + i;
        nonbasic_.resize(static_cast<std::size_t>(n_));
        at_upper_.assign(static_cast<std::size_t>(n_), false);
        reduced_.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            reduced_[j] = cost_[static_cast<std::size_t>(j)];
            at_upper_[j] = cost_[static_cast<std::size_t>(j)] < 0;
        }
    }

    LpSolution solve()
    {
        LpSolution sol;
        const long cap = 1000000;
        std::vector<Rational> xn(static_cast<std::size_t>(n_)), val(static_cast<std::size_t>(m_));
        for (;;) {
            for (int c = 0; c < n_; ++c)
                xn[c] = nonbasic_value(c);
            int leave = -1;
            bool raise = false;
            for (int r = 0; r < m_; ++r) {
                val[r] = 0;
                for (int c = 0; c < n_; ++c)
                    if (sgn(tab_[r][c]) != 0 && sgn(xn[c]) != 0)
                        val[r] += tab_[r][c] * xn[c];
                int var = basic_[r];
                const auto& lo = lo_[static_cast<std::size_t>(var)];
                const auto& hi = hi_[static_cast<std::size_t>(var)];
                bool below = lo.finite && val[r] < lo.value;
                bool above = hi.finite && val[r] > hi.value;
                if ((below || above) && (leave < 0 || var < basic_[leave])) {
                    leave = r;
                    raise = below;
                }
            }
            if (leave < 0)
                break;
            if (++sol.pivots > cap)
                throw std::logic_error("simplex_solve: iteration cap exceeded");

            int enter = -1;
            Rational best_ratio;
            for (int c = 0; c < n_; ++c) {
                const Rational& a = tab_[leave][c];
                int s = sgn(a);
                if (s == 0 || fixed(nonbasic_[c]))
                    continue;
                bool can_up = !at_upper_[c];
                // Moving the column up changes the basic variable by sign(a).
                bool helps = raise ? ((s > 0 && can_up) || (s < 0 && !can_up))
                                   : ((s < 0 && can_up) || (s > 0 && !can_up));
                if (!helps)
                    continue;
                Rational ratio = abs(reduced_[c] / a);
                if (enter < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && nonbasic_[c] < nonbasic_[enter])) {
                    enter = c;
                    best_ratio = ratio;
                }
            }
            if (enter < 0) {
                sol.feasible = false;
                return sol;
            }
            pivot(leave, enter, !raise);
        }

        sol.feasible = true;
        sol.x.assign(static_cast<std::size_t>(n_), 0);
        for (int c = 0; c < n_; ++c)
            if (nonbasic_[c] < n_)
                sol.x[static_cast<std::size_t>(nonbasic_[c])] = xn[c];
        for (int r = 0; r < m_; ++r)
            if (basic_[r] < n_)
                sol.x[static_cast<std::size_t>(basic_[r])] = val[r];
        sol.objective = 0;
        for (int j = 0; j < n_; ++j)
            sol.objective += cost_[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
        return sol;
    }

private:
    bool fixed(int var) const
    {
        const auto& lo = lo_[static_cast<std::size_t>(var)];
        const auto& hi = hi_[static_cast<std::size_t>(var)];
        return lo.finite && hi.finite && lo.value == hi.value;
    }

    Rational nonbasic_value(int c) const
    {
        int var = nonbasic_[c];
        const auto& b = at_upper_[c] ? hi_[static_cast<std::size_t>(var)] : lo_[static_cast<std::size_t>(var)];
        if (!b.finite)
            throw std::logic_error("simplex_solve: nonbasic variable at an infinite bound");
        return b.value;
    }

    void pivot(int r, int q, bool leave_at_upper)
    {
        Rational inv = 1 / tab_[r][q];
        auto& row = tab_[r];
        for (int c = 0; c < n_; ++c)
            row[c] = c == q ? inv : Rational(-row[c] * inv);
        for (int i = 0; i < m_; ++i) {
            if (i == r || sgn(tab_[i][q]) == 0)
                continue;
            Rational f = tab_[i][q];
            auto& ti = tab_[i];
            for (int c = 0; c < n_; ++c) {
                if (c == q)
                    ti[c] = f * row[c];
                else if (sgn(row[c]) != 0)
                    ti[c] += f * row[c];
            }
        }
        if (sgn(reduced_[q]) != 0) {
            Rational f = reduced_[q];
            for (int c = 0; c < n_; ++c) {
                if (c == q)
                    reduced_[c] = f * row[c];
                else if (sgn(row[c]) != 0)
                    reduced_[c] += f * row[c];
            }
        }
        std::swap(basic_[r], nonbasic_[q]);
        at_upper_[q] = leave_at_upper;
    }

    int n_, m_;
    std::vector<Rational> cost_;
    std::vector<Bound> lo_, hi_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basic_, nonbasic_;
    std::vector<bool> at_upper_;
    std::vector<Rational> reduced_;
};

} // namespace detail

/// Exact optimum of the minimization, or feasible == false.
inline LpSolution simplex_solve(const LinearProgram& lp)
{
    return detail::DualSimplex(lp).solve();
}

/// Plain-text dump: `min`, `st` and `bounds` sections.
inline void write_lp(std::ostream& out, const LinearProgram& lp, const std::vector<std::string>& names = {})
{
    auto name = [&](int j) {
        return static_cast<std::size_t>(j) < names.size() ? names[static_cast<std::size_t>(j)]
                                                          : "x" + std::to_string(j);
    };
    auto term = [&](const Rational& c, int j, bool first) {
        if (c < 0)
            out << (first ? "-" : " - ");
        else if (!first)
            out << " + ";
        Rational a = abs(c);
        if (a != 1)
            out << a << ' ';
        out << name(j);
    };
    out << "min\n ";
    bool first = true;
    for (int j = 0; j < lp.num_vars(); ++j)
        if (sgn(lp.costs()[static_cast<std::size_t>(j)]) != 0) {
            term(lp.costs()[static_cast<std::size_t>(j)], j, first);
            first = false;
        }
    if (first)
        out << '0';
    out << "\nst\n";
    for (const auto& row : lp.constraints()) {
        out << ' ';
        first = true;
        for (const auto& t : row.terms) {
            term(t.coeff, t.var, first);
            first = false;
        }
        if (first)
            out << '0';
        out << (row.rel == Relation::less_equal ? " <= " : row.rel == Relation::greater_equal ? " >= " : " = ")
            << row.rhs << '\n';
    }
    out << "bounds\n";
    for (int j = 0; j < lp.num_vars(); ++j)
        out << " 0 <= " << name(j) << " <= " << lp.upper_bounds()[static_cast<std::size_t>(j)] << '\n';
}

} // namespace tia

#endif
