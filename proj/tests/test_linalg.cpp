#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcvx/errors.hpp"
#include "pcvx/linalg.hpp"
#include "pcvx/rational.hpp"
#include "pcvx/sampling.hpp"

using namespace pcvx;

namespace {

Mat mat(std::vector<Vec> rows, int ncols) { return Mat::from_rows(std::move(rows), ncols); }

Vec rv(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

Mat random_mat(Rng& rng, int nrows, int ncols) {
    Mat m = Mat::zero(nrows, ncols);
    for (int i = 0; i < nrows; ++i) m.rows[i] = rng.coeff_vec(ncols);
    return m;
}

}  // namespace

TEST_CASE("rational literals") {
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_from_string("-4/2") == Rat(-2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/-2"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    CHECK_THROWS_AS(rat_from_string("+3"), ParseError);
    CHECK_THROWS_AS(rat_from_string(" 3"), ParseError);
}

TEST_CASE("rref on small matrices") {
    const RrefResult id = rref(Mat::identity(2));
    CHECK(id.reduced.rows == Mat::identity(2).rows);
    CHECK(id.pivot_cols == std::vector<int>{0, 1});

    const RrefResult zero = rref(Mat::zero(2, 3));
    CHECK(zero.reduced.rows == Mat::zero(2, 3).rows);
    CHECK(zero.pivot_cols.empty());

    const RrefResult dep = rref(mat({rv({1, 2}), rv({2, 4})}, 2));
    CHECK(dep.reduced.rows == std::vector<Vec>{rv({1, 2}), rv({0, 0})});
    CHECK(dep.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref is idempotent") {
    Rng rng(42);
    for (int it = 0; it < 50; ++it) {
        const Mat m = random_mat(rng, rng.uniform_int(0, 4), rng.uniform_int(1, 4));
        const Mat once = rref(m).reduced;
        CHECK(rref(once).reduced.rows == once.rows);
    }
}

TEST_CASE("nullspace_basis on small matrices") {
    CHECK(nullspace_basis(Mat::identity(2)).empty());
    CHECK(nullspace_basis(Mat::zero(1, 2)).size() == 2);

    const std::vector<Vec> ns = nullspace_basis(mat({rv({1, 1})}, 2));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(ns[0][0] != 0);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        const Mat m = random_mat(rng, rng.uniform_int(0, 4), rng.uniform_int(1, 5));
        for (const Vec& v : nullspace_basis(m)) {
            CHECK(is_zero_vec(mat_vec(m, v)));
        }
    }
}

TEST_CASE("solve_affine on small systems") {
    const auto s1 = solve_affine(mat({rv({1, 0})}, 2), rv({3}));
    REQUIRE(s1.has_value());
    CHECK(s1->particular == rv({3, 0}));
    REQUIRE(s1->kernel.size() == 1);
    CHECK(s1->kernel[0] == rv({0, 1}));

    CHECK_FALSE(solve_affine(mat({rv({1}), rv({1})}, 1), rv({0, 1})).has_value());

    const auto s3 = solve_affine(Mat::zero(0, 3), Vec{});
    REQUIRE(s3.has_value());
    CHECK(s3->particular == rv({0, 0, 0}));
    CHECK(s3->kernel.size() == 3);
}

TEST_CASE("solve_affine consistency matches the rank test") {
    Rng rng(11);
    for (int it = 0; it < 80; ++it) {
        const int n = rng.uniform_int(1, 4);
        const int m = rng.uniform_int(0, 4);
        const Mat a = random_mat(rng, m, n);
        Vec b(m);
        for (int i = 0; i < m; ++i) b[i] = rng.coeff();

        Mat aug = a;
        aug.ncols = n + 1;
        for (int i = 0; i < m; ++i) aug.rows[i].push_back(b[i]);

        const auto sol = solve_affine(a, b);
        CHECK(sol.has_value() == (rank(a) == rank(aug)));
        if (sol) {
            CHECK(mat_vec(a, sol->particular) == b);
            for (const Vec& k : sol->kernel) CHECK(is_zero_vec(mat_vec(a, k)));
        }
    }
}

TEST_CASE("primitive scaling") {
    CHECK(primitive(Vec{Rat(2, 3), Rat(-4, 3)}) == rv({1, -2}));
    CHECK(primitive(rv({0, 0})) == rv({0, 0}));
    CHECK(primitive(Vec{Rat(-1, 2)}) == Vec{Rat(-1)});
}

TEST_CASE("dimension mismatches are contract errors") {
    CHECK_THROWS_AS(dot(rv({1}), rv({1, 2})), DomainError);
    CHECK_THROWS_AS(solve_affine(Mat::identity(2), rv({1})), DomainError);
    CHECK_THROWS_AS(mat_vec(Mat::identity(2), rv({1})), DomainError);
}
