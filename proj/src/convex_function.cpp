#include "pcvx/convex_function.hpp"

#include <utility>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"

namespace pcvx {

std::string extreal_to_string(const ExtReal& v) {
    switch (v.tag) {
        case ExtReal::Tag::PlusInf:
            return "+inf";
        case ExtReal::Tag::MinusInf:
            return "-inf";
        case ExtReal::Tag::Finite:
            return rat_to_string(v.finite_value);
    }
    return "";
}

PCFunc make_pcfunc(int n, HRep epi) {
    if (n < 0) throw DomainError("pcfunc: negative dimension");
    if (epi.dim != n + 1) throw DomainError("pcfunc: epigraph dimension must be n + 1");
    if (!is_empty(epi)) {
        Vec up = zero_vec(n + 1);
        up[n] = 1;
        if (!recession_member(epi, up)) {
            throw DomainError("pcfunc: epigraph is not closed upward in t");
        }
    }
    return PCFunc{n, std::move(epi)};
}

namespace {

// The epigraph fiber {t : (x, t) in epi} as a one-variable LP.
ExtReal fiber_infimum(const HRep& epi, const Vec& x) {
    const int n = static_cast<int>(x.size());
    HRep fiber = hrep_universe(1);
    fiber.eq_A = Mat::zero(epi.eq_A.nrows, 1);
    fiber.eq_b = Vec(epi.eq_A.nrows);
    for (int i = 0; i < epi.eq_A.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < n; ++j) shift += epi.eq_A.rows[i][j] * x[j];
        fiber.eq_A.rows[i][0] = epi.eq_A.rows[i][n];
        fiber.eq_b[i] = epi.eq_b[i] - shift;
    }
    fiber.ineq_C = Mat::zero(epi.ineq_C.nrows, 1);
    fiber.ineq_d = Vec(epi.ineq_C.nrows);
    for (int i = 0; i < epi.ineq_C.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < n; ++j) shift += epi.ineq_C.rows[i][j] * x[j];
        fiber.ineq_C.rows[i][0] = epi.ineq_C.rows[i][n];
        fiber.ineq_d[i] = epi.ineq_d[i] - shift;
    }
    const LPResult r = solve_lp(Vec{Rat(1)}, fiber, Sense::Min);
    switch (r.status) {
        case LPStatus::Infeasible:
            return ExtReal::plus_inf();
        case LPStatus::Unbounded:
            return ExtReal::minus_inf();
        case LPStatus::Optimal:
            return ExtReal::finite(*r.value);
    }
    return ExtReal::plus_inf();
}

}  // namespace

ExtReal evaluate(const PCFunc& f, const Vec& x) {
    if (static_cast<int>(x.size()) != f.n) throw DomainError("evaluate: point dimension mismatch");
    return fiber_infimum(f.epi, x);
}

bool is_proper(const PCFunc& f) {
    if (is_empty(f.epi)) return false;
    Vec down = zero_vec(f.n + 1);
    down[f.n] = -1;
    return !recession_member(f.epi, down);
}

PCFunc optimal_value_fn(const PCFunc& phi, const MultiFn& f) {
    if (phi.n != f.nx + f.ny) throw DomainError("optimal_value_fn: objective dimension must be nx + ny");
    if (!is_proper(phi)) throw DomainError("optimal value construction requires a proper objective");

    // Over (x, y, t): Omega1 = epi phi, Omega2 = (gph F) x R.
    const HRep omega2 = product(f.graph, hrep_universe(1));
    const HRep both = intersect(phi.epi, omega2);
    CoordSet keep;
    for (int j = 0; j < f.nx; ++j) keep.push_back(j);
    keep.push_back(f.nx + f.ny);
    return make_pcfunc(f.nx, project(both, keep));
}

HRep solution_map(const PCFunc& phi, const MultiFn& f, const Vec& x) {
    if (phi.n != f.nx + f.ny) throw DomainError("solution_map: objective dimension must be nx + ny");
    if (static_cast<int>(x.size()) != f.nx) throw DomainError("solution_map: point dimension mismatch");

    // mu(x) by a direct parametric LP over (y, t).
    HRep joint = intersect(phi.epi, product(f.graph, hrep_universe(1)));
    CoordSet yt;
    for (int j = 0; j < f.ny; ++j) yt.push_back(f.nx + j);
    yt.push_back(f.nx + f.ny);

    // Substitute x without projecting: move the x-block to the rhs.
    HRep fixed = hrep_universe(f.ny + 1);
    fixed.eq_A = Mat::zero(joint.eq_A.nrows, f.ny + 1);
    fixed.eq_b = Vec(joint.eq_A.nrows);
    for (int i = 0; i < joint.eq_A.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += joint.eq_A.rows[i][j] * x[j];
        for (std::size_t k = 0; k < yt.size(); ++k) fixed.eq_A.rows[i][k] = joint.eq_A.rows[i][yt[k]];
        fixed.eq_b[i] = joint.eq_b[i] - shift;
    }
    fixed.ineq_C = Mat::zero(joint.ineq_C.nrows, f.ny + 1);
    fixed.ineq_d = Vec(joint.ineq_C.nrows);
    for (int i = 0; i < joint.ineq_C.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += joint.ineq_C.rows[i][j] * x[j];
        for (std::size_t k = 0; k < yt.size(); ++k) fixed.ineq_C.rows[i][k] = joint.ineq_C.rows[i][yt[k]];
        fixed.ineq_d[i] = joint.ineq_d[i] - shift;
    }

    Vec obj = zero_vec(f.ny + 1);
    obj[f.ny] = 1;
    const LPResult r = solve_lp(obj, fixed, Sense::Min);
    if (r.status != LPStatus::Optimal) return hrep_empty(f.ny);
    const Rat v = *r.value;

    // {y : y in F(x), phi(x, y) <= v}: the value set of F at x intersected
    // with the epigraph rows at (x, ., t = v).
    const HRep value_set = value(f, x);
    HRep level = hrep_universe(f.ny);
    level.eq_A = Mat::zero(phi.epi.eq_A.nrows, f.ny);
    level.eq_b = Vec(phi.epi.eq_A.nrows);
    for (int i = 0; i < phi.epi.eq_A.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += phi.epi.eq_A.rows[i][j] * x[j];
        shift += phi.epi.eq_A.rows[i][phi.n] * v;
        for (int j = 0; j < f.ny; ++j) level.eq_A.rows[i][j] = phi.epi.eq_A.rows[i][f.nx + j];
        level.eq_b[i] = phi.epi.eq_b[i] - shift;
    }
    level.ineq_C = Mat::zero(phi.epi.ineq_C.nrows, f.ny);
    level.ineq_d = Vec(phi.epi.ineq_C.nrows);
    for (int i = 0; i < phi.epi.ineq_C.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += phi.epi.ineq_C.rows[i][j] * x[j];
        shift += phi.epi.ineq_C.rows[i][phi.n] * v;
        for (int j = 0; j < f.ny; ++j) level.ineq_C.rows[i][j] = phi.epi.ineq_C.rows[i][f.nx + j];
        level.ineq_d[i] = phi.epi.ineq_d[i] - shift;
    }
    return intersect(value_set, level);
}

}  // namespace pcvx
