#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "pcvx/errors.hpp"
#include "pcvx/json_io.hpp"

using namespace pcvx;
using nlohmann::json;

namespace {

Vec rv(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

HRep unit_square() {
    return make_hrep(2, Mat::zero(0, 2), {},
                     Mat::from_rows({rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})}, 2),
                     rv({1, 0, 1, 0}));
}

bool hrep_fields_equal(const HRep& a, const HRep& b) {
    return a.dim == b.dim && a.eq_A.rows == b.eq_A.rows && a.eq_b == b.eq_b &&
           a.ineq_C.rows == b.ineq_C.rows && a.ineq_d == b.ineq_d;
}

}  // namespace

TEST_CASE("hrep documents round trip") {
    const HRep p = unit_square();
    const json j = hrep_to_json(p);
    CHECK(j.at("kind") == "hrep");
    CHECK(j.at("eq").at("A").is_array());
    CHECK(j.at("eq").at("A").empty());  // empty blocks are arrays, never absent
    CHECK(hrep_fields_equal(hrep_from_json(j), p));
}

TEST_CASE("vrep documents round trip") {
    const VRep v = make_vrep(2, {rv({0, 0}), rv({1, 1})}, {rv({1, 0})}, {rv({0, 1})});
    const json j = vrep_to_json(v);
    const VRep back = vrep_from_json(j);
    CHECK(back.points == v.points);
    CHECK(back.rays == v.rays);
    CHECK(back.lineality == v.lineality);
}

TEST_CASE("multifn, pcf, relopen, point, matrix round trip") {
    const MultiFn f = make_multifn(1, 1, unit_square());
    const MultiFn f2 = multifn_from_json(multifn_to_json(f));
    CHECK(f2.nx == 1);
    CHECK(f2.ny == 1);
    CHECK(hrep_fields_equal(f2.graph, f.graph));

    const PCFunc g = make_pcfunc(1, make_hrep(2, Mat::zero(0, 2), {},
                                              Mat::from_rows({rv({1, -1}), rv({-1, -1})}, 2), rv({0, 0})));
    const PCFunc g2 = pcfunc_from_json(pcfunc_to_json(g));
    CHECK(g2.n == 1);
    CHECK(hrep_fields_equal(g2.epi, g.epi));

    RelOpenHRep r;
    r.dim = 2;
    r.eq_A = Mat::from_rows({rv({0, 1})}, 2);
    r.eq_b = rv({0});
    r.strict_C = Mat::from_rows({rv({1, 0}), rv({-1, 0})}, 2);
    r.strict_d = rv({1, 0});
    const RelOpenHRep r2 = relopen_from_json(relopen_to_json(r));
    CHECK(r2.eq_A.rows == r.eq_A.rows);
    CHECK(r2.strict_C.rows == r.strict_C.rows);

    const Vec p = Vec{Rat(1, 2), Rat(-3)};
    CHECK(point_from_json(point_to_json(p)) == p);

    const Mat m = Mat::from_rows({rv({1, 2}), rv({3, 4})}, 2);
    CHECK(matrix_from_json(matrix_to_json(m)).rows == m.rows);
}

TEST_CASE("schema violations raise parse errors") {
    CHECK_THROWS_AS(hrep_from_json(json{{"kind", "hrep"}}), ParseError);
    CHECK_THROWS_AS(hrep_from_json(json::parse(R"({"kind":"what"})")), ParseError);
    CHECK_THROWS_AS(document_from_json(json::parse(R"({"kind":"what"})")), ParseError);
    // numbers must be rational strings
    CHECK_THROWS_AS(point_from_json(json::parse(R"({"kind":"point","v":[1,2]})")), ParseError);
    CHECK_THROWS_AS(point_from_json(json::parse(R"({"kind":"point","v":["1.5"]})")), ParseError);
    // row widths must match the dimension
    CHECK_THROWS_AS(
        hrep_from_json(json::parse(
            R"({"kind":"hrep","dim":2,"eq":{"A":[["1"]],"b":["0"]},"ineq":{"C":[],"d":[]}})")),
        ParseError);
}

TEST_CASE("pcf documents validate the epigraph invariant") {
    const json bad = json::parse(
        R"({"kind":"pcf","n":1,"epi":{"kind":"hrep","dim":2,"eq":{"A":[],"b":[]},"ineq":{"C":[["0","1"]],"d":["0"]}}})");
    CHECK_THROWS_AS(pcfunc_from_json(bad), DomainError);
}

TEST_CASE("text rendering shows rows") {
    const std::string text = render_text(hrep_to_json(unit_square()));
    CHECK(text.find("hrep dim 2") != std::string::npos);
    CHECK(text.find("≤") != std::string::npos);
    const std::string pred = render_text(json{{"member", true}});
    CHECK(pred.find("member: true") != std::string::npos);
}
