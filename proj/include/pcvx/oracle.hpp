#pragma once

#include "pcvx/convex_function.hpp"
#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"

namespace pcvx::oracle {

// Brute-force references used by the property suites and the `check`
// command. Everything here is built directly on row arithmetic and the LP
// engine so the code paths stay disjoint from the operations they validate;
// only the data types are shared.

/// All basic solutions of the homogenized system, feasibility-filtered.
/// Guarded to dim <= 4 and at most 12 rows; violating the guard is an error,
/// never a truncation.
VRep enumerate_basic_solutions(const HRep& p);

/// Intrinsic-relative-interior test straight from the definition: the cone
/// generated by P - x must be a linear subspace, decided by one cone
/// membership LP per generator. Requires x in P.
bool iri_member_oracle(const HRep& p, const Vec& x);

/// mu(x) = inf{phi(x,y) : y in F(x)} by one direct LP over (y, t); never
/// builds the epigraph of mu.
ExtReal optval_oracle(const PCFunc& phi, const MultiFn& f, const Vec& x);

/// Feasibility of {y : (x, y) in gph F} intersected with extra conditions on
/// y. The shared kernel of the pointwise composition/sum/image checks.
bool pointwise_relation_oracle(const MultiFn& f, const Vec& x, const HRep& extra_on_y);

/// z in (G o F)(x): a y with (x, y) in gph F and (y, z) in gph G exists.
bool compose_member_oracle(const MultiFn& f, const MultiFn& g, const Vec& x, const Vec& z);

/// z in (F1 + F2)(x): y1 + y2 = z with y1 in F1(x), y2 in F2(x).
bool sum_member_oracle(const MultiFn& f1, const MultiFn& f2, const Vec& x, const Vec& z);

/// y in F(C): an x in C with (x, y) in gph F exists.
bool image_member_oracle(const MultiFn& f, const HRep& c, const Vec& y);

/// x in the projection of p onto `keep`: the lifted system is feasible.
bool lifted_member_oracle(const HRep& p, const CoordSet& keep, const Vec& x);

/// y in T(D): {x in D : T x = y} is feasible.
bool linear_image_member_oracle(const Mat& t, const HRep& d, const Vec& y);

}  // namespace pcvx::oracle
