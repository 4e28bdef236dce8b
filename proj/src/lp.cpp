#include "pcvx/lp.hpp"

#include <utility>

#include "pcvx/errors.hpp"

namespace pcvx {

namespace {

// Dense tableau in canonical form: rows hold [columns | rhs], rhs kept
// nonnegative; `obj` holds reduced costs with -(objective value) in the rhs
// slot. Minimization throughout.
struct Tableau {
    int ncols = 0;
    std::vector<Vec> rows;
    Vec obj;
    std::vector<int> basis;

    void pivot(int pr, int pc) {
        Vec& prow = rows[pr];
        const Rat inv = Rat(1) / prow[pc];
        for (Rat& x : prow) x *= inv;
        auto eliminate = [&](Vec& r) {
            const Rat f = r[pc];
            if (f == 0) return;
            for (int j = 0; j <= ncols; ++j) r[j] -= f * prow[j];
        };
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != pr) eliminate(rows[i]);
        }
        eliminate(obj);
        basis[pr] = pc;
    }

    // Bland: lowest column index with a negative reduced cost.
    int entering() const {
        for (int j = 0; j < ncols; ++j) {
            if (obj[j] < 0) return j;
        }
        return -1;
    }

    // Minimum-ratio row; ties broken on the smallest basic variable index.
    int leaving(int col) const {
        int best = -1;
        Rat best_ratio;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] <= 0) continue;
            Rat ratio = rows[i][ncols] / rows[i][col];
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Runs to optimality; false means the objective is unbounded below.
    bool iterate() {
        for (;;) {
            const int e = entering();
            if (e < 0) return true;
            const int l = leaving(e);
            if (l < 0) return false;
            pivot(l, e);
        }
    }

    void set_costs(const Vec& costs) {
        obj.assign(ncols + 1, Rat(0));
        for (int j = 0; j < ncols; ++j) obj[j] = costs[j];
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            const Rat cb = costs[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= ncols; ++j) obj[j] -= cb * rows[i][j];
        }
    }

    Rat objective_value() const { return -obj[ncols]; }
};

enum class CoreStatus { Infeasible, Unbounded, Optimal };

// min c.y  s.t.  C y <= d, y free.  Free variables are split into positive
// parts, slacks added per row, artificials only where the rhs is negative.
CoreStatus solve_free_ineq(const Vec& c, const Mat& C, const Vec& d, Vec* out_y) {
    const int f = static_cast<int>(c.size());
    const int m = C.nrows;
    const int nstruct = 2 * f;

    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i) {
        if (d[i] < 0) art_rows.push_back(i);
    }
    const int na = static_cast<int>(art_rows.size());

    Tableau t;
    t.ncols = nstruct + m + na;
    t.rows.assign(m, Vec(t.ncols + 1, Rat(0)));
    t.basis.assign(m, -1);

    int art = 0;
    for (int i = 0; i < m; ++i) {
        const bool neg = d[i] < 0;
        const Rat sgn = neg ? Rat(-1) : Rat(1);
        Vec& row = t.rows[i];
        for (int j = 0; j < f; ++j) {
            row[j] = sgn * C.rows[i][j];
            row[f + j] = -sgn * C.rows[i][j];
        }
        row[nstruct + i] = sgn;  // slack
        row[t.ncols] = sgn * d[i];
        if (neg) {
            row[nstruct + m + art] = 1;
            t.basis[i] = nstruct + m + art;
            ++art;
        } else {
            t.basis[i] = nstruct + i;
        }
    }

    if (na > 0) {
        Vec phase1_costs(t.ncols, Rat(0));
        for (int k = 0; k < na; ++k) phase1_costs[nstruct + m + k] = 1;
        t.set_costs(phase1_costs);
        t.iterate();  // bounded below by zero
        if (t.objective_value() > 0) return CoreStatus::Infeasible;

        // Drive leftover artificials out of the basis; a row with no real
        // column to pivot on is redundant and gets dropped.
        for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
            if (t.basis[i] < nstruct + m) continue;
            int pc = -1;
            for (int j = 0; j < nstruct + m; ++j) {
                if (t.rows[i][j] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0) {
                t.pivot(i, pc);
            } else {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        for (Vec& row : t.rows) row.erase(row.begin() + nstruct + m, row.begin() + nstruct + m + na);
        t.ncols = nstruct + m;
    }

    Vec phase2_costs(t.ncols, Rat(0));
    for (int j = 0; j < f; ++j) {
        phase2_costs[j] = c[j];
        phase2_costs[f + j] = -c[j];
    }
    t.set_costs(phase2_costs);
    if (!t.iterate()) return CoreStatus::Unbounded;

    if (out_y) {
        Vec w(t.ncols, Rat(0));
        for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) w[t.basis[i]] = t.rows[i][t.ncols];
        out_y->assign(f, Rat(0));
        for (int j = 0; j < f; ++j) (*out_y)[j] = w[j] - w[f + j];
    }
    return CoreStatus::Optimal;
}

// Substitution x = p0 + S y obtained by solving the equality block; y ranges
// over the free columns.
struct EqElimination {
    bool consistent = true;
    Vec p0;
    Mat S;  // dim x f
};

EqElimination eliminate_equalities(const HRep& set) {
    EqElimination out;
    const int n = set.dim;
    Mat aug = set.eq_A;
    aug.ncols = n + 1;
    for (int i = 0; i < aug.nrows; ++i) aug.rows[i].push_back(set.eq_b[i]);
    const RrefResult r = rref(aug);

    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) {
        if (c == n) {
            out.consistent = false;
            return out;
        }
        is_pivot[c] = true;
    }

    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    const int f = static_cast<int>(free_cols.size());

    out.p0 = zero_vec(n);
    out.S = Mat::zero(n, f);
    for (int k = 0; k < f; ++k) out.S.rows[free_cols[k]][k] = 1;
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        const int pc = r.pivot_cols[k];
        out.p0[pc] = r.reduced.rows[k][n];
        for (int j = 0; j < f; ++j) out.S.rows[pc][j] = -r.reduced.rows[k][free_cols[j]];
    }
    return out;
}

}  // namespace

LPResult solve_lp(const Vec& objective, const HRep& set, Sense sense) {
    if (static_cast<int>(objective.size()) != set.dim) {
        throw DomainError("solve_lp: objective dimension does not match the set");
    }
    Vec c = objective;
    if (sense == Sense::Max) {
        for (Rat& x : c) x = -x;
    }

    const EqElimination elim = eliminate_equalities(set);
    LPResult res;
    if (!elim.consistent) return res;  // Infeasible

    const Mat C = mat_mul(set.ineq_C, elim.S);
    const Vec d = sub(set.ineq_d, mat_vec(set.ineq_C, elim.p0));
    const Vec cf = mat_vec(transpose(elim.S), c);

    auto finish = [&](const Vec& y) {
        const Vec x = add(elim.p0, mat_vec(elim.S, y));
        res.status = LPStatus::Optimal;
        res.value = dot(objective, x);
        res.point = x;
    };

    if (elim.S.ncols == 0) {
        for (int i = 0; i < C.nrows; ++i) {
            if (d[i] < 0) return res;  // Infeasible
        }
        finish(Vec{});
        return res;
    }

    Vec y;
    switch (solve_free_ineq(cf, C, d, &y)) {
        case CoreStatus::Infeasible:
            return res;
        case CoreStatus::Unbounded:
            res.status = LPStatus::Unbounded;
            return res;
        case CoreStatus::Optimal:
            finish(y);
            return res;
    }
    return res;
}

bool feasible(const HRep& set) { return feasible_point(set).has_value(); }

std::optional<Vec> feasible_point(const HRep& set) {
    const LPResult r = solve_lp(zero_vec(set.dim), set, Sense::Min);
    if (r.status != LPStatus::Optimal) return std::nullopt;
    return r.point;
}

}  // namespace pcvx
