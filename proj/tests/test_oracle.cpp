#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcvx/convex_function.hpp"
#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"
#include "pcvx/oracle.hpp"
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

HRep unit_square() {
    return ineq_only(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})}, rv({1, 0, 1, 0}));
}

}  // namespace

TEST_CASE("basic solutions of the unit square are its vertices") {
    const VRep v = oracle::enumerate_basic_solutions(unit_square());
    CHECK(v.points == std::vector<Vec>{rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})});
    CHECK(v.rays.empty());
    CHECK(v.lineality.empty());
}

TEST_CASE("basic solutions of a halfline") {
    const VRep v = oracle::enumerate_basic_solutions(ineq_only(1, {rv({-1})}, rv({0})));
    CHECK(v.points == std::vector<Vec>{rv({0})});
    CHECK(v.rays == std::vector<Vec>{rv({1})});
    CHECK(v.lineality.empty());
}

TEST_CASE("basic solutions of an empty set") {
    const VRep v = oracle::enumerate_basic_solutions(ineq_only(1, {rv({1}), rv({-1})}, rv({0, -1})));
    CHECK(v.points.empty());
    CHECK(v.rays.empty());
    CHECK(v.lineality.empty());
}

TEST_CASE("size guards are hard errors") {
    CHECK_THROWS_AS(oracle::enumerate_basic_solutions(hrep_universe(5)), DomainError);

    std::vector<Vec> rows(13, rv({1}));
    Vec rhs(13, Rat(1));
    CHECK_THROWS_AS(oracle::enumerate_basic_solutions(ineq_only(1, std::move(rows), std::move(rhs))),
                    DomainError);
}

TEST_CASE("iri membership oracle") {
    const HRep interval = ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1}));
    CHECK(oracle::iri_member_oracle(interval, Vec{Rat(1, 2)}));
    CHECK_FALSE(oracle::iri_member_oracle(interval, rv({0})));

    const HRep point = ineq_only(1, {rv({1}), rv({-1})}, rv({2, -2}));
    CHECK(oracle::iri_member_oracle(point, rv({2})));

    CHECK_THROWS_AS(oracle::iri_member_oracle(interval, rv({7})), DomainError);
}

TEST_CASE("optimal value oracle") {
    const PCFunc phi = make_pcfunc(2, ineq_only(3, {rv({0, 1, -1})}, rv({0})));  // phi(x, y) = y
    const MultiFn above_abs = make_multifn(1, 1, ineq_only(2, {rv({1, -1}), rv({-1, -1})}, rv({0, 0})));
    CHECK(oracle::optval_oracle(phi, above_abs, rv({-2})) == ExtReal::finite(Rat(2)));

    const MultiFn clamped = make_multifn(
        1, 1,
        make_hrep(2, Mat::from_rows({rv({1, -1})}, 2), rv({0}),
                  Mat::from_rows({rv({-1, 0}), rv({1, 0})}, 2), rv({0, 1})));
    CHECK(oracle::optval_oracle(phi, clamped, rv({7})) == ExtReal::plus_inf());

    const MultiFn everything = make_multifn(1, 1, hrep_universe(2));
    CHECK(oracle::optval_oracle(phi, everything, rv({0})) == ExtReal::minus_inf());
}

TEST_CASE("pointwise relation oracle") {
    // identity multifunction: y = x
    const MultiFn ident = make_multifn(1, 1,
                                       make_hrep(2, Mat::from_rows({rv({1, -1})}, 2), rv({0}),
                                                 Mat::zero(0, 2), {}));
    CHECK(oracle::pointwise_relation_oracle(ident, rv({3}), hrep_universe(1)));

    const HRep pin_to_4 = make_hrep(1, Mat::from_rows({rv({1})}, 1), rv({4}), Mat::zero(0, 1), {});
    CHECK_FALSE(oracle::pointwise_relation_oracle(ident, rv({3}), pin_to_4));
    CHECK(oracle::pointwise_relation_oracle(ident, rv({4}), pin_to_4));
}

TEST_CASE("enumeration represents the same set on guarded instances") {
    Rng rng(31337);
    for (int it = 0; it < 25; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_hrep(rng, dim, 6);
        CHECK(set_equal(v_to_h(oracle::enumerate_basic_solutions(p)), p));
    }
}
