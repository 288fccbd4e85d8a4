#include "adeg/lp.hpp"

#include <stdexcept>

namespace adeg {

void LpProblem::add_row(std::vector<Rat> a, Rel rel, Rat b) {
    if (static_cast<int>(a.size()) != num_vars)
        throw std::invalid_argument("LpProblem::add_row: wrong coefficient count");
    rows.push_back(Row{std::move(a), rel, std::move(b)});
}

namespace {

struct UnboundedSignal {};

// Dense tableau with a maintained reduced-cost row. The entering rule is
// Dantzig's (most negative reduced cost); after a run of degenerate pivots
// it falls back to Bland's smallest-index rule until the objective strictly
// improves again, which rules out cycling while keeping the usual speed.
struct Tableau {
    int m = 0;
    int ncols = 0;
    std::vector<std::vector<Rat>> t;  // m x (ncols+1), last column = rhs
    std::vector<Rat> zrow;            // reduced costs z_j - c_j, size ncols
    std::vector<int> basis;
    std::vector<bool> artificial;
    std::vector<Rat> cost;  // phase-2 costs

    static constexpr int kDegenerateRunLimit = 40;

    void recompute_zrow(const std::vector<Rat>& c) {
        zrow.assign(ncols, Rat(0));
        for (int j = 0; j < ncols; ++j) {
            Rat z = 0;
            for (int r = 0; r < m; ++r) {
                if (c[basis[r]] == 0 || t[r][j] == 0) continue;
                z += c[basis[r]] * t[r][j];
            }
            zrow[j] = z - c[j];
        }
    }

    void pivot(int r, int j) {
        Rat p = t[r][j];
        for (auto& v : t[r]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][j] == 0) continue;
            Rat f = t[i][j];
            for (int col = 0; col <= ncols; ++col) t[i][col] -= f * t[r][col];
        }
        // update the reduced-cost row: z'_k = z_k - z_j * T'[r][k]
        Rat zj = zrow[j];
        if (zj != 0) {
            for (int col = 0; col < ncols; ++col) {
                if (t[r][col] == 0) continue;
                zrow[col] -= zj * t[r][col];
            }
        }
        basis[r] = j;
    }

    Rat objective(const std::vector<Rat>& c) const {
        Rat z = 0;
        for (int r = 0; r < m; ++r) {
            if (c[basis[r]] == 0 || t[r][ncols] == 0) continue;
            z += c[basis[r]] * t[r][ncols];
        }
        return z;
    }

    // One optimization phase; throws UnboundedSignal.
    void optimize(const std::vector<Rat>& c, bool allow_artificial_entering) {
        recompute_zrow(c);
        int degenerate_run = 0;
        while (true) {
            const bool bland = degenerate_run >= kDegenerateRunLimit;
            int enter = -1;
            if (bland) {
                for (int j = 0; j < ncols; ++j) {
                    if (artificial[j] && !allow_artificial_entering) continue;
                    if (zrow[j] < 0) {
                        enter = j;
                        break;
                    }
                }
            } else {
                const Rat* best = nullptr;
                for (int j = 0; j < ncols; ++j) {
                    if (artificial[j] && !allow_artificial_entering) continue;
                    if (zrow[j] < 0 && (best == nullptr || zrow[j] < *best)) {
                        best = &zrow[j];
                        enter = j;
                    }
                }
            }
            if (enter < 0) return;
            int leave = -1;
            Rat ratio;
            for (int r = 0; r < m; ++r) {
                if (t[r][enter] <= 0) continue;
                Rat cand = t[r][ncols] / t[r][enter];
                if (leave < 0 || cand < ratio ||
                    (cand == ratio && basis[r] < basis[leave])) {
                    leave = r;
                    ratio = cand;
                }
            }
            if (leave < 0) throw UnboundedSignal{};
            if (ratio == 0)
                ++degenerate_run;
            else
                degenerate_run = 0;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& prob) {
    const int n = prob.num_vars;
    if (static_cast<int>(prob.objective.size()) != n)
        throw std::invalid_argument("solve_lp: objective size mismatch");
    const int m = static_cast<int>(prob.rows.size());

    // Internal sense is maximize.
    std::vector<Rat> c_int(prob.objective);
    if (!prob.maximize)
        for (auto& v : c_int) v = -v;

    // Normalize rows to b >= 0, remembering sign flips for dual recovery.
    std::vector<std::vector<Rat>> a(m);
    std::vector<Rat> b(m);
    std::vector<Rel> rel(m);
    std::vector<bool> flipped(m, false);
    for (int i = 0; i < m; ++i) {
        a[i] = prob.rows[i].a;
        b[i] = prob.rows[i].b;
        rel[i] = prob.rows[i].rel;
        if (b[i] < 0) {
            flipped[i] = true;
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
            if (rel[i] == Rel::Le)
                rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge)
                rel[i] = Rel::Le;
        }
    }

    // Column layout: structural, then one slack/surplus per inequality row,
    // then one artificial per Ge/Eq row. unit_col[i] is the column that
    // starts as +e_i, used to read B^{-1} for the duals.
    int ncols = n;
    std::vector<int> slack_col(m, -1), art_col(m, -1), unit_col(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::Eq) slack_col[i] = ncols++;
    }
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::Le) art_col[i] = ncols++;
    }
    for (int i = 0; i < m; ++i) unit_col[i] = rel[i] == Rel::Le ? slack_col[i] : art_col[i];

    Tableau tab;
    tab.m = m;
    tab.ncols = ncols;
    tab.t.assign(m, std::vector<Rat>(ncols + 1, Rat(0)));
    tab.basis.assign(m, -1);
    tab.artificial.assign(ncols, false);
    tab.cost.assign(ncols, Rat(0));
    for (int j = 0; j < n; ++j) tab.cost[j] = c_int[j];

    std::vector<Rat> cost1(ncols, Rat(0));  // phase 1: maximize -sum(artificials)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
        tab.t[i][ncols] = b[i];
        if (slack_col[i] >= 0) tab.t[i][slack_col[i]] = rel[i] == Rel::Le ? 1 : -1;
        if (art_col[i] >= 0) {
            tab.t[i][art_col[i]] = 1;
            tab.artificial[art_col[i]] = true;
            cost1[art_col[i]] = -1;
            tab.basis[i] = art_col[i];
        } else {
            tab.basis[i] = slack_col[i];
        }
    }

    LpSolution sol;
    try {
        tab.optimize(cost1, true);
        if (tab.objective(cost1) != 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive any basic artificial (necessarily at value 0) out of the
        // basis. A row whose non-artificial entries are all zero is redundant;
        // phase-2 pivots can never touch it again, so it constrains nothing.
        for (int r = 0; r < m; ++r) {
            if (!tab.artificial[tab.basis[r]]) continue;
            for (int cj = 0; cj < ncols; ++cj) {
                if (tab.artificial[cj]) continue;
                if (tab.t[r][cj] != 0) {
                    tab.recompute_zrow(cost1);
                    tab.pivot(r, cj);
                    break;
                }
            }
        }
        tab.optimize(tab.cost, false);
    } catch (const UnboundedSignal&) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n, Rat(0));
    for (int r = 0; r < m; ++r)
        if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.t[r][ncols];
    Rat obj = tab.objective(tab.cost);
    sol.objective = prob.maximize ? obj : Rat(-obj);
    sol.dual.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat y = 0;
        for (int r = 0; r < m; ++r) {
            if (tab.cost[tab.basis[r]] == 0 || tab.t[r][unit_col[i]] == 0) continue;
            y += tab.cost[tab.basis[r]] * tab.t[r][unit_col[i]];
        }
        if (flipped[i]) y = -y;
        sol.dual[i] = prob.maximize ? y : Rat(-y);
    }
    return sol;
}

}  // namespace adeg
