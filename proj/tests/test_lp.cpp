#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"
#include "pcvx/sampling.hpp"

using namespace pcvx;

namespace {

Vec rv(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

HRep ineq_only(int dim, std::vector<Vec> c, Vec d) {
    return make_hrep(dim, Mat::zero(0, dim), {}, Mat::from_rows(std::move(c), dim), std::move(d));
}

}  // namespace

TEST_CASE("single active constraint") {
    // min x over {x >= 2}
    const HRep p = ineq_only(1, {rv({-1})}, rv({-2}));
    const LPResult r = solve_lp(rv({1}), p, Sense::Min);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.value == Rat(2));
    CHECK(*r.point == rv({2}));
}

TEST_CASE("contradictory rows are infeasible") {
    const HRep p = ineq_only(1, {rv({1}), rv({-1})}, rv({0, -1}));
    CHECK(solve_lp(rv({1}), p, Sense::Min).status == LPStatus::Infeasible);
    CHECK_FALSE(feasible(p));
}

TEST_CASE("ray direction is unbounded") {
    const HRep p = ineq_only(1, {rv({-1})}, rv({0}));
    CHECK(solve_lp(rv({-1}), p, Sense::Min).status == LPStatus::Unbounded);
}

TEST_CASE("feasibility certificates") {
    CHECK(feasible(ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1}))));
    CHECK(feasible(hrep_universe(3)));
    const auto pt = feasible_point(ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1})));
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] >= 0);
    CHECK((*pt)[0] <= 1);
}

TEST_CASE("equality rows are eliminated natively") {
    // min x1 over {x1 + x2 = 1, x1 >= 0, x2 >= 0}
    const HRep p = make_hrep(2, Mat::from_rows({rv({1, 1})}, 2), rv({1}),
                             Mat::from_rows({rv({-1, 0}), rv({0, -1})}, 2), rv({0, 0}));
    const LPResult r = solve_lp(rv({1, 0}), p, Sense::Min);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.value == Rat(0));
    CHECK(member(p, *r.point));

    // inconsistent equalities
    const HRep q = make_hrep(1, Mat::from_rows({rv({1}), rv({1})}, 1), rv({0, 1}), Mat::zero(0, 1), {});
    CHECK(solve_lp(rv({1}), q, Sense::Min).status == LPStatus::Infeasible);
}

TEST_CASE("zero-dimensional programs") {
    const LPResult r = solve_lp(Vec{}, hrep_universe(0), Sense::Min);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(*r.value == Rat(0));
    CHECK(r.point->empty());
    CHECK_FALSE(feasible(hrep_empty(0)));
}

TEST_CASE("objective dimension mismatch is a contract error") {
    CHECK_THROWS_AS(solve_lp(rv({1, 2}), hrep_universe(1), Sense::Min), DomainError);
}

TEST_CASE("max mirrors min with negated objective") {
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_hrep(rng, dim, 5);
        const Vec c = rng.coeff_vec(dim);
        Vec neg = c;
        for (Rat& x : neg) x = -x;

        const LPResult mx = solve_lp(c, p, Sense::Max);
        const LPResult mn = solve_lp(neg, p, Sense::Min);
        CHECK(mx.status == mn.status);
        if (mx.status == LPStatus::Optimal) {
            CHECK(*mx.value == -*mn.value);
            CHECK(member(p, *mx.point));
            CHECK(dot(c, *mx.point) == *mx.value);
        }
    }
}

TEST_CASE("optimal points satisfy every row exactly") {
    Rng rng(77);
    int optimal_seen = 0;
    for (int it = 0; it < 80; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_hrep(rng, dim, 6);
        const LPResult r = solve_lp(rng.coeff_vec(dim), p, Sense::Min);
        if (r.status != LPStatus::Optimal) continue;
        ++optimal_seen;
        CHECK(member(p, *r.point));
    }
    CHECK(optimal_seen > 5);
}
