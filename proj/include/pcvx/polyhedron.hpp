#pragma once

#include <vector>

#include "pcvx/linalg.hpp"

namespace pcvx {

/// H-representation over `dim` coordinates:
///   { x : eq_A x = eq_b,  ineq_C x <= ineq_d }.
/// Equality rows encode the affine subspace; inequality rows the halfspaces.
struct HRep {
    int dim = 0;
    Mat eq_A;
    Vec eq_b;
    Mat ineq_C;
    Vec ineq_d;
};

/// V-representation: conv(points) + cone(rays) + span(lineality).
/// `points` is nonempty exactly when the set is nonempty.
struct VRep {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};

/// Strictly increasing coordinate indices into an ambient space.
using CoordSet = std::vector<int>;

HRep hrep_universe(int dim);

/// Canonical empty set of a given dimension: the single row 0*x <= -1.
HRep hrep_empty(int dim);

HRep make_hrep(int dim, Mat eq_A, Vec eq_b, Mat ineq_C, Vec ineq_d);
VRep make_vrep(int dim, std::vector<Vec> points, std::vector<Vec> rays, std::vector<Vec> lineality);

bool member(const HRep& p, const Vec& x);
bool is_empty(const HRep& p);

/// Direction v lies in the recession cone: eq_A v = 0 and ineq_C v <= 0.
bool recession_member(const HRep& p, const Vec& v);

/// Generator form of the same set (double description on the homogenization).
/// Output generators are primitive and lexicographically sorted; minimality is
/// not promised.
VRep h_to_v(const HRep& p);

/// Constraint form of the same set (double description on the polar cone).
HRep v_to_h(const VRep& v);

/// Coordinate projection {x_keep : x in p} by Fourier-Motzkin elimination,
/// substituting along equality rows where possible and pruning redundant rows
/// after each eliminated coordinate.
HRep project(const HRep& p, const CoordSet& keep);

HRep intersect(const HRep& p, const HRep& q);
HRep product(const HRep& p, const HRep& q);

/// {a + b : a in p, b in q}, through the generator representations.
HRep minkowski_sum(const HRep& p, const HRep& q);

/// {T x : x in p}, through the generator representation of p.
HRep linear_image(const Mat& t, const HRep& p);

/// {x : T x in q}, by composing q's rows with T.
HRep linear_preimage(const Mat& t, const HRep& q);

/// Equality-only HRep of aff(p): explicit equalities plus every inequality row
/// that is tight on all of p. Error on the empty set.
HRep affine_hull(const HRep& p);

/// {v : eq_A v = 0, ineq_C v <= 0}. Error on the empty set.
HRep recession_cone(const HRep& p);

/// Same set, with duplicate and LP-redundant inequality rows removed,
/// implicit equalities promoted to the equality block, and the equality block
/// reduced. Canonical empty output for empty input.
HRep remove_redundancy(const HRep& p);

/// Mutual inclusion, decided on generators: points must satisfy the other
/// set's rows, rays must lie in its recession cone, lineality in both
/// directions.
bool set_equal(const HRep& p, const HRep& q);

/// One-sided inclusion p ⊆ q by the same generator test.
bool subset_of(const HRep& p, const HRep& q);

/// Row canonicalization only (no LP): scale rows to coprime integers, drop
/// trivially true rows, dedupe, sort. Detects trivially false rows.
HRep canonicalize_rows(const HRep& p);

bool valid_coordset(const CoordSet& keep, int dim);

/// Per-row LP scan over the inequality block: whether each row's slack is
/// positive somewhere on p, with a witness point of p when it is. Requires p
/// nonempty. Rows are independent, so the scan runs them in parallel.
struct RowSlack {
    bool positive = false;
    Vec witness;
};
std::vector<RowSlack> inequality_slack_scan(const HRep& p);

}  // namespace pcvx
