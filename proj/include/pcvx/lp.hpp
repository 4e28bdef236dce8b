#pragma once

#include <optional>

#include "pcvx/polyhedron.hpp"

namespace pcvx {

enum class LPStatus { Infeasible, Unbounded, Optimal };
enum class Sense { Min, Max };

/// Exact classification of a linear program. `value` and `point` are present
/// exactly when the status is Optimal; the point is feasible and attains the
/// value.
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Rat> value;
    std::optional<Vec> point;
};

/// Optimize `objective` over an HRep feasible set. Exact rational simplex with
/// Bland's pivot rule; equality rows are eliminated up front by row reduction.
LPResult solve_lp(const Vec& objective, const HRep& set, Sense sense);

/// Phase-1 feasibility certificate.
bool feasible(const HRep& set);

/// A feasible point, when one exists.
std::optional<Vec> feasible_point(const HRep& set);

}  // namespace pcvx
