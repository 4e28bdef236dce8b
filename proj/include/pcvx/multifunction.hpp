#pragma once

#include "pcvx/polyhedron.hpp"

// Set-valued calculus through graph-level polyhedral operations. Everything
// here works over finite-dimensional rational coordinate spaces, where linear
// images and coordinate projections of polyhedra are again closed polyhedra;
// none of the operations need closedness side conditions.

namespace pcvx {

/// A multifunction F: R^nx => R^ny stored as the HRep of its graph over the
/// (x, y) product space, x-block first. An empty graph is legal and denotes
/// the empty multifunction.
struct MultiFn {
    int nx = 0;
    int ny = 0;
    HRep graph;
};

MultiFn make_multifn(int nx, int ny, HRep graph);

/// dom F = projection of the graph onto the x-block.
HRep domain(const MultiFn& f);

/// rge F = projection of the graph onto the y-block.
HRep range(const MultiFn& f);

/// Swaps the coordinate blocks; an involution.
MultiFn inverse(const MultiFn& f);

/// F(x) as an HRep over the y-block, by substituting x into the graph rows.
HRep value(const MultiFn& f, const Vec& x);

/// F(C) = projection of gph F intersected with C x R^ny.
HRep image(const MultiFn& f, const HRep& c);

/// F^{-1}(D) = image of D under the inverse multifunction.
HRep preimage(const MultiFn& f, const HRep& d);

/// G after F: the graphs are embedded into (x, z, y)-space, intersected, and
/// the middle block is projected out by Fourier-Motzkin.
MultiFn compose(const MultiFn& g, const MultiFn& f);

/// (F1+F2)(x) = F1(x) + F2(x): the embedded intersection over (x, y1, y2) is
/// mapped through (x, y1, y2) -> (x, y1+y2) via the generator representation.
MultiFn sum(const MultiFn& f1, const MultiFn& f2);

}  // namespace pcvx
