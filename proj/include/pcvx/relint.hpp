#pragma once

#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"

namespace pcvx {

/// Sorted inequality-row indices of an HRep whose slack is positive somewhere
/// on the set; the complement consists of implicit equalities.
using IndexSet = std::vector<int>;

/// A relatively open polyhedron: affine-hull equalities plus strict
/// inequality rows. Distinct from HRep so strict sets are never silently
/// treated as closed.
struct RelOpenHRep {
    int dim = 0;
    Mat eq_A;
    Vec eq_b;
    Mat strict_C;
    Vec strict_d;
};

/// One LP per inequality row (maximize its slack, capped at 1): a row enters
/// the set exactly when the maximum is positive. Error on the empty set.
IndexSet binding_index_set(const HRep& p);

/// ri p: affine-hull equalities plus p's inequality rows restricted to the
/// binding index set, taken strictly. Error on the empty set; never empty.
RelOpenHRep relative_interior(const HRep& p);

bool relopen_member(const RelOpenHRep& r, const Vec& x);

/// x in p with every binding-index row strict at x.
bool ri_member(const HRep& p, const Vec& x);

/// A point of ri p: the average of the per-row slack witnesses, or any
/// feasible point when no row can be strict.
Vec relint_witness(const HRep& p);

/// x in ri(dom F), F(x) nonempty, and y in ri(F(x)). Equals membership of
/// (x, y) in ri(gph F); the agreement of the two routes is checked by the
/// property suites rather than assumed here.
bool ri_graph_member_decomposed(const MultiFn& f, const Vec& x, const Vec& y);

}  // namespace pcvx
