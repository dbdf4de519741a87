#pragma once

#include <vector>

#include "netcap/common.hpp"

namespace netcap {

// Small dense two-phase primal simplex with Bland's rule. Templated so the
// same code runs on doubles (eps > 0) and exact rationals (eps == 0).

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LinearProgram {
    enum Rel { LE = -1, EQ = 0, GE = 1 };
    struct Row {
        std::vector<T> a;
        int rel;
        T b;
    };
    int num_vars = 0;
    std::vector<T> objective;     // maximize; empty => pure feasibility
    std::vector<bool> free_vars;  // default: all variables >= 0
    std::vector<Row> rows;

    void add_row(std::vector<T> a, int rel, T b) { rows.push_back(Row{std::move(a), rel, std::move(b)}); }
};

template <class T>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<T> x;
    T objective{};
};

template <class T>
LpResult<T> solve_lp(const LinearProgram<T>& lp, const T& eps) {
    const int n = lp.num_vars;
    const int m = static_cast<int>(lp.rows.size());

    // Column layout: split structural vars, then slack/surplus, then artificials.
    std::vector<int> pos_col(n), neg_col(n, -1);
    int ncols = 0;
    for (int j = 0; j < n; ++j) {
        pos_col[j] = ncols++;
        if (j < static_cast<int>(lp.free_vars.size()) && lp.free_vars[j]) neg_col[j] = ncols++;
    }
    const int struct_cols = ncols;

    struct PreppedRow {
        std::vector<T> a;
        T b;
        int rel;
    };
    std::vector<PreppedRow> rows(m);
    for (int i = 0; i < m; ++i) {
        const auto& r = lp.rows[i];
        PreppedRow pr;
        pr.a.assign(struct_cols, T(0));
        for (int j = 0; j < n; ++j) {
            pr.a[pos_col[j]] = r.a[j];
            if (neg_col[j] >= 0) pr.a[neg_col[j]] = -r.a[j];
        }
        pr.b = r.b;
        pr.rel = r.rel;
        if (pr.b < T(0)) {
            for (auto& v : pr.a) v = -v;
            pr.b = -pr.b;
            pr.rel = -pr.rel;
        }
        rows[i] = std::move(pr);
    }

    // Slack/surplus columns.
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (rows[i].rel != LinearProgram<T>::EQ) slack_col[i] = ncols++;
    // Artificial columns: GE and EQ rows need one.
    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (rows[i].rel != LinearProgram<T>::LE) art_col[i] = ncols++;

    const int rhs = ncols;
    std::vector<std::vector<T>> tab(m, std::vector<T>(ncols + 1, T(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < struct_cols; ++j) tab[i][j] = rows[i].a[j];
        if (slack_col[i] >= 0)
            tab[i][slack_col[i]] = rows[i].rel == LinearProgram<T>::LE ? T(1) : T(-1);
        if (art_col[i] >= 0) tab[i][art_col[i]] = T(1);
        tab[i][rhs] = rows[i].b;
        basis[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
    }

    std::vector<bool> blocked(ncols, false);
    std::vector<T> row0(ncols + 1, T(0));

    auto pivot = [&](int pr, int pc) {
        T piv = tab[pr][pc];
        for (int j = 0; j <= ncols; ++j) tab[pr][j] = tab[pr][j] / piv;
        for (int i = 0; i < m; ++i) {
            if (i == pr) continue;
            T f = tab[i][pc];
            if (f == T(0)) continue;
            for (int j = 0; j <= ncols; ++j) tab[i][j] = tab[i][j] - f * tab[pr][j];
        }
        T f0 = row0[pc];
        if (f0 != T(0))
            for (int j = 0; j <= ncols; ++j) row0[j] = row0[j] - f0 * tab[pr][j];
        basis[pr] = pc;
    };

    // row0[j] = cB.B^-1.A_j - c_j ; entering while row0[j] < -eps (Bland).
    auto run_simplex = [&]() -> bool {  // returns false on unbounded
        const long max_iters = 1000000;
        for (long iter = 0; iter < max_iters; ++iter) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (blocked[j]) continue;
                if (row0[j] < -eps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            T best_ratio{};
            for (int i = 0; i < m; ++i) {
                if (tab[i][enter] > eps) {
                    T ratio = tab[i][rhs] / tab[i][enter];
                    if (leave < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
        throw NetcapError("simplex iteration limit exceeded");
    };

    auto set_objective = [&](const std::vector<T>& c) {
        for (int j = 0; j <= ncols; ++j) row0[j] = T(0);
        for (int j = 0; j < ncols; ++j) row0[j] = -(j < static_cast<int>(c.size()) ? c[j] : T(0));
        for (int i = 0; i < m; ++i) {
            T cb = basis[i] < static_cast<int>(c.size()) ? c[basis[i]] : T(0);
            if (cb == T(0)) continue;
            for (int j = 0; j <= ncols; ++j) row0[j] = row0[j] + cb * tab[i][j];
        }
    };

    LpResult<T> res;

    // Phase 1: maximize -(sum of artificials).
    bool have_art = false;
    for (int i = 0; i < m; ++i) have_art |= art_col[i] >= 0;
    if (have_art) {
        std::vector<T> c1(ncols, T(0));
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) c1[art_col[i]] = T(-1);
        set_objective(c1);
        if (!run_simplex()) throw NetcapError("phase-1 simplex unbounded");
        T infeas = -row0[rhs];  // sum of artificials at optimum
        if (infeas > eps) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Drive remaining artificials out of the basis, then block them.
        for (int i = 0; i < m; ++i) {
            if (art_col[i] >= 0 && basis[i] == art_col[i]) {
                int pc = -1;
                for (int j = 0; j < ncols; ++j) {
                    bool is_art = false;
                    for (int k = 0; k < m; ++k) is_art |= art_col[k] == j;
                    if (is_art) continue;
                    if (tab[i][j] > eps || tab[i][j] < -eps) {
                        pc = j;
                        break;
                    }
                }
                if (pc >= 0) pivot(i, pc);
            }
        }
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) blocked[art_col[i]] = true;
    }

    // Phase 2.
    std::vector<T> c2(ncols, T(0));
    if (!lp.objective.empty()) {
        for (int j = 0; j < n; ++j) {
            c2[pos_col[j]] = lp.objective[j];
            if (neg_col[j] >= 0) c2[neg_col[j]] = -lp.objective[j];
        }
    }
    set_objective(c2);
    if (!run_simplex()) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(n, T(0));
    std::vector<T> colval(ncols, T(0));
    for (int i = 0; i < m; ++i) colval[basis[i]] = tab[i][rhs];
    for (int j = 0; j < n; ++j) {
        res.x[j] = colval[pos_col[j]];
        if (neg_col[j] >= 0) res.x[j] = res.x[j] - colval[neg_col[j]];
    }
    res.objective = row0[rhs];
    return res;
}

}  // namespace netcap
