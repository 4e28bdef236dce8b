#pragma once

#include <string>

#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"

namespace pcvx {

/// Extended real value with the total order PlusInf > Finite(r) > MinusInf.
struct ExtReal {
    enum class Tag { MinusInf, Finite, PlusInf };
    Tag tag = Tag::Finite;
    Rat finite_value;  // meaningful only when tag == Finite

    static ExtReal finite(Rat v) { return ExtReal{Tag::Finite, std::move(v)}; }
    static ExtReal plus_inf() { return ExtReal{Tag::PlusInf, Rat(0)}; }
    static ExtReal minus_inf() { return ExtReal{Tag::MinusInf, Rat(0)}; }

    bool is_finite() const { return tag == Tag::Finite; }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.tag != b.tag) return false;
        return a.tag != Tag::Finite || a.finite_value == b.finite_value;
    }
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.tag == b.tag) return a.tag == Tag::Finite && a.finite_value < b.finite_value;
        if (a.tag == Tag::MinusInf) return true;
        if (b.tag == Tag::PlusInf) return true;
        return false;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
};

std::string extreal_to_string(const ExtReal& v);

/// A polyhedral convex function f: R^n -> [-inf, inf] stored by its epigraph
/// over (x, t), with t the last coordinate. The epigraph must be closed
/// upward in t.
struct PCFunc {
    int n = 0;
    HRep epi;
};

/// Validates the upward-closure invariant: when the epigraph is nonempty, the
/// direction e_t must lie in its recession cone.
PCFunc make_pcfunc(int n, HRep epi);

/// f(x) = inf of the epigraph fiber over x: Finite when bounded below
/// (attained), MinusInf when unbounded below, PlusInf when empty.
ExtReal evaluate(const PCFunc& f, const Vec& x);

/// f never takes -inf and is not identically +inf.
bool is_proper(const PCFunc& f);

/// The optimal value function mu(x) = inf{phi(x,y) : y in F(x)}, materialized
/// through its epigraph: epi mu = projection of epi phi intersected with
/// (gph F) x R onto the (x, t) coordinates. Requires phi proper.
PCFunc optimal_value_fn(const PCFunc& phi, const MultiFn& f);

/// The solution set M(x) = {y in F(x) : phi(x,y) = mu(x)} as an HRep over the
/// y-block; empty when mu(x) is not finite.
HRep solution_map(const PCFunc& phi, const MultiFn& f, const Vec& x);

}  // namespace pcvx
