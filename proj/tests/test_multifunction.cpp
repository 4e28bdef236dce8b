#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"
#include "pcvx/multifunction.hpp"
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

HRep eq_only(int dim, std::vector<Vec> a, Vec b) {
    return make_hrep(dim, Mat::from_rows(std::move(a), dim), std::move(b), Mat::zero(0, dim), {});
}

HRep interval(const Rat& lo, const Rat& hi) {
    return make_hrep(1, Mat::zero(0, 1), {}, Mat::from_rows({Vec{Rat(-1)}, Vec{Rat(1)}}, 1), Vec{-lo, hi});
}

// gph {(x, y) : y >= x, y >= -x}
MultiFn abs_like() {
    return make_multifn(1, 1, ineq_only(2, {rv({1, -1}), rv({-1, -1})}, rv({0, 0})));
}

// gph {(x, y) : 0 <= x <= 1, y = x}
MultiFn clamped_identity() {
    return make_multifn(1, 1,
                        make_hrep(2, Mat::from_rows({rv({1, -1})}, 2), rv({0}),
                                  Mat::from_rows({rv({-1, 0}), rv({1, 0})}, 2), rv({0, 1})));
}

MultiFn identity_mfn(int n) {
    std::vector<Vec> rows;
    Vec rhs;
    for (int j = 0; j < n; ++j) {
        Vec row = zero_vec(2 * n);
        row[j] = 1;
        row[n + j] = -1;
        rows.push_back(row);
        rhs.push_back(Rat(0));
    }
    return make_multifn(n, n, eq_only(2 * n, std::move(rows), std::move(rhs)));
}

MultiFn empty_mfn(int nx, int ny) { return make_multifn(nx, ny, hrep_empty(nx + ny)); }

}  // namespace

TEST_CASE("domain") {
    CHECK(set_equal(domain(abs_like()), hrep_universe(1)));
    CHECK(set_equal(domain(clamped_identity()), interval(Rat(0), Rat(1))));
    CHECK(is_empty(domain(empty_mfn(1, 1))));
}

TEST_CASE("range") {
    const MultiFn doubling = make_multifn(1, 1, eq_only(2, {rv({2, -1})}, rv({0})));
    CHECK(set_equal(range(doubling), hrep_universe(1)));
    CHECK(set_equal(range(clamped_identity()), interval(Rat(0), Rat(1))));

    const MultiFn upper = make_multifn(1, 1, ineq_only(2, {rv({0, -1})}, rv({0})));
    CHECK(set_equal(range(upper), ineq_only(1, {rv({-1})}, rv({0}))));
}

TEST_CASE("inverse is an involution") {
    Rng rng(404);
    for (int it = 0; it < 10; ++it) {
        const MultiFn f = random_multifn(rng, rng.uniform_int(1, 2), rng.uniform_int(1, 2), 5, false);
        CHECK(set_equal(inverse(inverse(f)).graph, f.graph));
    }

    const MultiFn doubling = make_multifn(1, 1, eq_only(2, {rv({2, -1})}, rv({0})));
    const MultiFn inv = inverse(doubling);
    const HRep at1 = value(inv, rv({1}));  // F^{-1}(1) = {1/2}
    CHECK(member(at1, Vec{Rat(1, 2)}));
    CHECK_FALSE(member(at1, rv({1})));

    CHECK(is_empty(inverse(empty_mfn(2, 1)).graph));
}

TEST_CASE("value") {
    CHECK(set_equal(value(abs_like(), rv({-2})), ineq_only(1, {rv({-1})}, rv({-2}))));
    CHECK(is_empty(value(clamped_identity(), rv({5}))));
    const MultiFn ident = identity_mfn(1);
    CHECK(set_equal(value(ident, rv({7})), eq_only(1, {rv({1})}, rv({7}))));
    CHECK_THROWS_AS(value(ident, rv({1, 2})), DomainError);
}

TEST_CASE("image") {
    CHECK(set_equal(image(identity_mfn(1), interval(Rat(0), Rat(1))), interval(Rat(0), Rat(1))));

    const MultiFn above = make_multifn(1, 1, ineq_only(2, {rv({1, -1})}, rv({0})));
    CHECK(set_equal(image(above, hrep_universe(1)), range(above)));
    CHECK(set_equal(image(above, interval(Rat(0), Rat(1))), ineq_only(1, {rv({-1})}, rv({0}))));
}

TEST_CASE("preimage") {
    CHECK(set_equal(preimage(identity_mfn(1), interval(Rat(0), Rat(1))), interval(Rat(0), Rat(1))));

    const MultiFn doubling = make_multifn(1, 1, eq_only(2, {rv({2, -1})}, rv({0})));
    CHECK(set_equal(preimage(doubling, hrep_universe(1)), domain(doubling)));
    CHECK(set_equal(preimage(doubling, interval(Rat(0), Rat(2))), interval(Rat(0), Rat(1))));
}

TEST_CASE("compose of affine single-valued maps") {
    // F(x) = {x + 1}, G(y) = {3 y}
    const MultiFn f = make_multifn(1, 1, eq_only(2, {rv({1, -1})}, rv({-1})));
    const MultiFn g = make_multifn(1, 1, eq_only(2, {rv({3, -1})}, rv({0})));
    const MultiFn gf = compose(g, f);
    CHECK(set_equal(gf.graph, eq_only(2, {rv({3, -1})}, rv({-3}))));  // z = 3x + 3
    for (int x = -2; x <= 2; ++x) {
        CHECK(oracle::compose_member_oracle(f, g, Vec{Rat(x)}, Vec{Rat(3 * x + 3)}));
        CHECK(member(gf.graph, Vec{Rat(x), Rat(3 * x + 3)}));
        CHECK_FALSE(member(gf.graph, Vec{Rat(x), Rat(3 * x + 4)}));
    }

    const MultiFn h = abs_like();
    CHECK(set_equal(compose(identity_mfn(1), h).graph, h.graph));
    CHECK(is_empty(compose(g, empty_mfn(1, 1)).graph));
    CHECK_THROWS_AS(compose(make_multifn(2, 1, hrep_universe(3)), h), DomainError);
}

TEST_CASE("sum of halfplane mappings") {
    const MultiFn f1 = make_multifn(1, 1, ineq_only(2, {rv({1, -1})}, rv({0})));   // {y >= x}
    const MultiFn f2 = make_multifn(1, 1, ineq_only(2, {rv({-1, -1})}, rv({0})));  // {y >= -x}
    const MultiFn s = sum(f1, f2);
    CHECK(set_equal(s.graph, ineq_only(2, {rv({0, -1})}, rv({0}))));  // {y >= 0} for every x

    const MultiFn zero = make_multifn(1, 1, eq_only(2, {rv({0, 1})}, rv({0})));
    CHECK(set_equal(sum(f1, zero).graph, f1.graph));

    Rng rng(808);
    for (int it = 0; it < 8; ++it) {
        const MultiFn a = random_multifn(rng, 1, 1, 4, false);
        const MultiFn b = random_multifn(rng, 1, 1, 4, false);
        CHECK(set_equal(domain(sum(a, b)), intersect(domain(a), domain(b))));
    }
}

TEST_CASE("composition is associative and inverts contravariantly") {
    Rng rng(271828);
    for (int it = 0; it < 6; ++it) {
        const int a = rng.uniform_int(1, 2);
        const int b = rng.uniform_int(1, 2);
        const int c = rng.uniform_int(1, 2);
        const int d = rng.uniform_int(1, 2);
        const MultiFn e = random_multifn(rng, a, b, 4, false);
        const MultiFn f = random_multifn(rng, b, c, 4, false);
        const MultiFn g = random_multifn(rng, c, d, 4, false);

        CHECK(set_equal(compose(compose(g, f), e).graph, compose(g, compose(f, e)).graph));
        CHECK(set_equal(inverse(compose(f, e)).graph, compose(inverse(e), inverse(f)).graph));
    }
}

TEST_CASE("sum is commutative") {
    Rng rng(314159);
    for (int it = 0; it < 6; ++it) {
        const int nx = rng.uniform_int(1, 2);
        const int ny = rng.uniform_int(1, 2);
        const MultiFn a = random_multifn(rng, nx, ny, 4, false);
        const MultiFn b = random_multifn(rng, nx, ny, 4, false);
        CHECK(set_equal(sum(a, b).graph, sum(b, a).graph));
    }
}

TEST_CASE("domain and range swap under inversion") {
    Rng rng(1666);
    for (int it = 0; it < 10; ++it) {
        const MultiFn f = random_multifn(rng, rng.uniform_int(1, 2), rng.uniform_int(1, 2), 5, false);
        CHECK(set_equal(domain(f), range(inverse(f))));
        CHECK(set_equal(range(f), domain(inverse(f))));
    }
}

TEST_CASE("image membership matches the union over the argument set") {
    Rng rng(9090);
    for (int it = 0; it < 10; ++it) {
        const int nx = rng.uniform_int(1, 2);
        const int ny = rng.uniform_int(1, 2);
        const MultiFn f = random_multifn(rng, nx, ny, 5, false);
        const HRep c = random_hrep(rng, nx, 4);
        const HRep img = image(f, c);
        for (int k = 0; k < 8; ++k) {
            const Vec y = rng.sample_vec(ny);
            CHECK(member(img, y) == oracle::image_member_oracle(f, c, y));
        }
    }
}

TEST_CASE("zero-dimensional blocks") {
    // F: R^0 => R^1 with graph [0, 1]: the constant mapping on the point space
    const MultiFn constant = make_multifn(0, 1, ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1})));
    CHECK(set_equal(domain(constant), hrep_universe(0)));
    CHECK(set_equal(range(constant), ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1}))));
    CHECK(set_equal(value(constant, Vec{}), ineq_only(1, {rv({-1}), rv({1})}, rv({0, 1}))));
}

TEST_CASE("domain membership matches value nonemptiness") {
    Rng rng(4242);
    for (int it = 0; it < 10; ++it) {
        const MultiFn f = random_multifn(rng, rng.uniform_int(1, 2), 1, 5, false);
        const HRep dom = domain(f);
        for (int k = 0; k < 6; ++k) {
            const Vec x = rng.sample_vec(f.nx);
            CHECK(member(dom, x) == !is_empty(value(f, x)));
        }
    }
}
