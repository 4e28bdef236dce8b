#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"
#include "pcvx/oracle.hpp"
#include "pcvx/relint.hpp"
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

// [0,1] x {0} in R^2: rows x1 >= 0, x1 <= 1, x2 <= 0, -x2 <= 0
HRep segment() {
    return ineq_only(2, {rv({-1, 0}), rv({1, 0}), rv({0, 1}), rv({0, -1})}, rv({0, 1, 0, 0}));
}

HRep unit_square() {
    return ineq_only(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})}, rv({1, 0, 1, 0}));
}

}  // namespace

TEST_CASE("binding_index_set") {
    CHECK(binding_index_set(segment()) == IndexSet{0, 1});
    CHECK(binding_index_set(ineq_only(1, {rv({1}), rv({-1})}, rv({0, 0}))).empty());
    CHECK(binding_index_set(unit_square()) == IndexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(binding_index_set(hrep_empty(1)), DomainError);
}

TEST_CASE("relative_interior of a segment") {
    const RelOpenHRep ri = relative_interior(segment());
    CHECK(ri.eq_A.nrows == 1);
    CHECK(ri.strict_C.nrows == 2);
    CHECK(relopen_member(ri, Vec{Rat(1, 2), Rat(0)}));
    CHECK_FALSE(relopen_member(ri, rv({0, 0})));
    CHECK_FALSE(relopen_member(ri, Vec{Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("relative_interior of a point and of the whole space") {
    const RelOpenHRep point = relative_interior(ineq_only(1, {rv({1}), rv({-1})}, rv({0, 0})));
    CHECK(point.strict_C.nrows == 0);
    CHECK(relopen_member(point, rv({0})));
    CHECK_FALSE(relopen_member(point, rv({1})));

    const RelOpenHRep whole = relative_interior(hrep_universe(2));
    CHECK(whole.eq_A.nrows == 0);
    CHECK(whole.strict_C.nrows == 0);
    CHECK(relopen_member(whole, rv({5, -7})));

    CHECK_THROWS_AS(relative_interior(hrep_empty(2)), DomainError);
}

TEST_CASE("ri_member on the segment") {
    CHECK(ri_member(segment(), Vec{Rat(1, 2), Rat(0)}));
    CHECK_FALSE(ri_member(segment(), rv({0, 0})));
    CHECK_FALSE(ri_member(segment(), rv({5, 5})));
    CHECK_THROWS_AS(ri_member(segment(), rv({1})), DomainError);
}

TEST_CASE("graph decomposition on a triangular graph") {
    // gph {(x, y) : 0 <= x <= 1, 0 <= y <= x}
    const MultiFn f = make_multifn(
        1, 1, ineq_only(2, {rv({-1, 0}), rv({1, 0}), rv({0, -1}), rv({-1, 1})}, rv({0, 1, 0, 0})));
    CHECK(ri_graph_member_decomposed(f, Vec{Rat(1, 2)}, Vec{Rat(1, 4)}));
    CHECK_FALSE(ri_graph_member_decomposed(f, Vec{Rat(1, 2)}, Vec{Rat(1, 2)}));
    CHECK_FALSE(ri_graph_member_decomposed(f, rv({9}), rv({0})));

    CHECK(ri_member(f.graph, Vec{Rat(1, 2), Rat(1, 4)}));
    CHECK_FALSE(ri_member(f.graph, Vec{Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("formula agrees with the iri definition at sampled points") {
    Rng rng(5252);
    for (int it = 0; it < 20; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_nonempty_hrep(rng, dim, 6);
        for (const Vec& x : sample_grid(h_to_v(p), dim, rng, 8)) {
            if (!member(p, x)) {
                CHECK_FALSE(ri_member(p, x));
                continue;
            }
            CHECK(ri_member(p, x) == oracle::iri_member_oracle(p, x));
        }
    }
}

TEST_CASE("every nonempty polyhedron has a relative interior witness") {
    Rng rng(97);
    for (int it = 0; it < 25; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_nonempty_hrep(rng, dim, 6);
        CHECK(ri_member(p, relint_witness(p)));
    }
}

TEST_CASE("ri_member is invariant under redundancy removal and row scaling") {
    Rng rng(246);
    for (int it = 0; it < 15; ++it) {
        const int dim = rng.uniform_int(1, 3);
        const HRep p = random_nonempty_hrep(rng, dim, 5);

        HRep scaled = p;
        for (int i = 0; i < scaled.ineq_C.nrows; ++i) {
            Rat fct(rng.uniform_int(1, 5), rng.uniform_int(1, 5));
            fct.canonicalize();
            scaled.ineq_C.rows[i] = scale(fct, scaled.ineq_C.rows[i]);
            scaled.ineq_d[i] *= fct;
        }
        const HRep reduced = remove_redundancy(p);

        for (int k = 0; k < 6; ++k) {
            const Vec x = rng.sample_vec(dim);
            const bool expected = member(p, x) && ri_member(p, x);
            CHECK(ri_member(scaled, x) == expected);
            CHECK(ri_member(reduced, x) == expected);
        }
    }
}

TEST_CASE("duplicate rows enter or leave the index set together") {
    Rng rng(135);
    for (int it = 0; it < 10; ++it) {
        const int dim = rng.uniform_int(1, 2);
        HRep p = random_nonempty_hrep(rng, dim, 4);
        if (p.ineq_C.nrows == 0) continue;
        p.ineq_C.rows.push_back(p.ineq_C.rows[0]);
        p.ineq_C.nrows += 1;
        p.ineq_d.push_back(p.ineq_d[0]);

        const IndexSet idx = binding_index_set(p);
        const bool first = std::find(idx.begin(), idx.end(), 0) != idx.end();
        const bool dup = std::find(idx.begin(), idx.end(), p.ineq_C.nrows - 1) != idx.end();
        CHECK(first == dup);
    }
}
