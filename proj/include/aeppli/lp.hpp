// Two-phase dense simplex over an ordered field, used for cone feasibility.
//
// maximize c.x  subject to  A_eq x = b_eq,  A_ge x >= b_ge,  x free.
//
// Free variables are split, surplus variables added for the inequalities and
// artificials for every row; phase one drives the artificials out.  With
// T = Rat and Bland's rule every verdict is exact; the floating instantiation
// (largest-coefficient rule, epsilon pivoting, iteration cap) exists for
// problems past the exact-arithmetic size threshold and its output is always
// re-verified exactly by the caller.

#pragma once

#include <cstddef>
#include <vector>

#include "aeppli/errors.hpp"
#include "aeppli/linalg.hpp"
#include "aeppli/scalar.hpp"

namespace aeppli {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

template <typename T>
struct LpProblem {
    std::size_t nvars = 0;
    std::vector<Vec<T>> eq_rows;
    std::vector<T> eq_rhs;
    std::vector<Vec<T>> ge_rows;
    std::vector<T> ge_rhs;
    Vec<T> objective;

    void add_eq(Vec<T> row, T rhs) {
        eq_rows.push_back(std::move(row));
        eq_rhs.push_back(std::move(rhs));
    }
    void add_ge(Vec<T> row, T rhs) {
        ge_rows.push_back(std::move(row));
        ge_rhs.push_back(std::move(rhs));
    }
};

template <typename T>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vec<T> x;
    T objective{0};
};

namespace detail {

template <typename T>
struct SimplexTraits {
    static bool is_neg(const T& v) { return v < 0; }
    static bool is_pos(const T& v) { return v > 0; }
    static bool bland() { return true; }
    static std::size_t max_iter(std::size_t m, std::size_t n) { return 50 * (m + n) + 5000; }
};

template <>
struct SimplexTraits<double> {
    static constexpr double eps = 1e-9;
    static bool is_neg(double v) { return v < -eps; }
    static bool is_pos(double v) { return v > eps; }
    static bool bland() { return false; }
    static std::size_t max_iter(std::size_t m, std::size_t n) { return 50 * (m + n) + 5000; }
};

// Tableau rows: m constraints; columns: structural ++ rhs.  basis[i] is the
// column basic in row i.  Minimizes cost.c over the tableau.
template <typename T>
class Simplex {
public:
    Simplex(std::vector<Vec<T>> rows, Vec<T> rhs, std::size_t ncols)
        : m_(rows.size()), n_(ncols), a_(std::move(rows)), b_(std::move(rhs)), basis_(m_, 0) {}

    std::size_t m() const { return m_; }
    std::vector<std::size_t>& basis() { return basis_; }

    // Columns at or past `blocked_from` never enter the basis.
    // Returns false on iteration limit.
    bool minimize(const Vec<T>& cost, LpStatus& status, std::size_t blocked_from) {
        using Tr = SimplexTraits<T>;
        std::size_t iter = 0;
        const std::size_t limit = Tr::max_iter(m_, n_);
        while (true) {
            if (++iter > limit) {
                status = LpStatus::IterationLimit;
                return false;
            }
            // reduced costs r_j = c_j - c_B . col_j, computed fresh
            Vec<T> dual(m_);
            for (std::size_t i = 0; i < m_; ++i) dual[i] = cost[basis_[i]];
            std::ptrdiff_t enter = -1;
            T best_r{0};
            for (std::size_t j = 0; j < blocked_from && j < n_; ++j) {
                T r = cost[j];
                for (std::size_t i = 0; i < m_; ++i) {
                    if (!ScalarOps<T>::is_zero(a_[i][j])) r -= dual[i] * a_[i][j];
                }
                if (Tr::is_neg(r)) {
                    if (Tr::bland()) {
                        enter = static_cast<std::ptrdiff_t>(j);
                        break;
                    }
                    if (enter < 0 || r < best_r) {
                        enter = static_cast<std::ptrdiff_t>(j);
                        best_r = r;
                    }
                }
            }
            if (enter < 0) {
                status = LpStatus::Optimal;
                return true;
            }
            // ratio test; Bland tie-break on the basic variable index
            std::ptrdiff_t leave = -1;
            T best_ratio{0};
            for (std::size_t i = 0; i < m_; ++i) {
                if (!Tr::is_pos(a_[i][static_cast<std::size_t>(enter)])) continue;
                T ratio = b_[i] / a_[i][static_cast<std::size_t>(enter)];
                if (leave < 0 || ratio < best_ratio ||
                    (!(best_ratio < ratio) && basis_[i] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = static_cast<std::ptrdiff_t>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                status = LpStatus::Unbounded;
                return true;
            }
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const T inv = T(1) / a_[row][col];
        for (std::size_t j = 0; j < n_; ++j) a_[row][j] = a_[row][j] * inv;
        b_[row] = b_[row] * inv;
        a_[row][col] = T(1);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || ScalarOps<T>::is_zero(a_[i][col])) continue;
            const T f = a_[i][col];
            for (std::size_t j = 0; j < n_; ++j) a_[i][j] = a_[i][j] - f * a_[row][j];
            b_[i] = b_[i] - f * b_[row];
            a_[i][col] = T(0);
        }
        basis_[row] = col;
    }

    const Vec<T>& rhs() const { return b_; }
    const std::vector<Vec<T>>& rows() const { return a_; }

private:
    std::size_t m_, n_;
    std::vector<Vec<T>> a_;
    Vec<T> b_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

template <typename T>
LpSolution<T> lp_solve(const LpProblem<T>& prob) {
    using Tr = detail::SimplexTraits<T>;
    const std::size_t m = prob.eq_rows.size() + prob.ge_rows.size();
    const std::size_t nx = prob.nvars;
    const std::size_t nsurplus = prob.ge_rows.size();
    // columns: x+ (nx) | x- (nx) | surplus (nsurplus) | artificial (m)
    const std::size_t ncols = 2 * nx + nsurplus + m;

    std::vector<Vec<T>> rows;
    Vec<T> rhs;
    std::size_t ge_index = 0;
    auto add_row = [&](const Vec<T>& coeff, const T& b, bool ge) {
        Vec<T> row(ncols, T(0));
        for (std::size_t j = 0; j < nx; ++j) {
            row[j] = coeff[j];
            row[nx + j] = -coeff[j];
        }
        T bb = b;
        if (ge) row[2 * nx + ge_index] = T(-1);
        const bool flip = Tr::is_neg(bb);
        if (flip) {
            for (auto& v : row) v = -v;
            bb = -bb;
        }
        row[2 * nx + nsurplus + rows.size()] = T(1);  // artificial
        rows.push_back(std::move(row));
        rhs.push_back(bb);
        if (ge) ++ge_index;
    };
    for (std::size_t i = 0; i < prob.eq_rows.size(); ++i) add_row(prob.eq_rows[i], prob.eq_rhs[i], false);
    for (std::size_t i = 0; i < prob.ge_rows.size(); ++i) add_row(prob.ge_rows[i], prob.ge_rhs[i], true);

    detail::Simplex<T> sx(std::move(rows), std::move(rhs), ncols);
    for (std::size_t i = 0; i < m; ++i) sx.basis()[i] = 2 * nx + nsurplus + i;

    LpSolution<T> sol;
    const std::size_t art_from = 2 * nx + nsurplus;
    // Phase 1: minimize the artificial sum
    Vec<T> cost1(ncols, T(0));
    for (std::size_t i = 0; i < m; ++i) cost1[art_from + i] = T(1);
    LpStatus st;
    if (!sx.minimize(cost1, st, ncols)) {
        sol.status = LpStatus::IterationLimit;
        return sol;
    }
    T art_sum{0};
    for (std::size_t i = 0; i < m; ++i)
        if (sx.basis()[i] >= art_from) art_sum += sx.rhs()[i];
    if (Tr::is_pos(art_sum)) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    // Drive leftover zero-valued artificials out of the basis where possible;
    // rows where none of the structural columns can pivot are redundant and
    // keep their artificial fixed at zero.
    for (std::size_t i = 0; i < m; ++i) {
        if (sx.basis()[i] < art_from) continue;
        for (std::size_t j = 0; j < art_from; ++j) {
            const T& v = sx.rows()[i][j];
            if (Tr::is_pos(v) || Tr::is_neg(v)) {
                sx.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2: maximize the objective = minimize its negation; artificial
    // columns are blocked from re-entering
    Vec<T> cost2(ncols, T(0));
    for (std::size_t j = 0; j < nx; ++j) {
        cost2[j] = -prob.objective[j];
        cost2[nx + j] = prob.objective[j];
    }
    if (!sx.minimize(cost2, st, art_from)) {
        sol.status = LpStatus::IterationLimit;
        return sol;
    }
    if (st == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.x.assign(nx, T(0));
    Vec<T> full(ncols, T(0));
    for (std::size_t i = 0; i < sx.m(); ++i) full[sx.basis()[i]] = sx.rhs()[i];
    for (std::size_t j = 0; j < nx; ++j) sol.x[j] = full[j] - full[nx + j];
    sol.objective = T(0);
    for (std::size_t j = 0; j < nx; ++j) sol.objective += prob.objective[j] * sol.x[j];
    return sol;
}

}  // namespace aeppli
