#include "doctest.h"

#include "bm/json_io.hpp"
#include "test_helpers.hpp"

using namespace bm;

TEST_CASE("rational json round trip") {
    CHECK(rational_to_json(Rational(9, 5)) == Json("9/5"));
    CHECK(rational_from_json(Json("5/9")) == Rational(5, 9));
    CHECK(rational_from_json(Json(-3)) == Rational(-3));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
}

TEST_CASE("matrix and polytope round trips") {
    Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        const QMatrix m = testing::random_invertible(rng, 2 + i % 3);
        CHECK(qmatrix_from_json(qmatrix_to_json(m)) == m);
        const VPolytope p = testing::random_polygon(rng, 6);
        CHECK(vpolytope_from_json(vpolytope_to_json(p)).vertices == p.vertices);
    }
    CHECK_THROWS_AS(qmatrix_from_json(Json{{"n", 2}}), ParseError);
    CHECK_THROWS_AS(qmatrix_from_json(Json{{"n", 2}, {"entries", Json::array({1, 2})}}),
                    ParseError);
}

TEST_CASE("certificate json carries the exact fields") {
    auto op = OperatorT::from_matrix(nice_base_matrix());
    auto res = certify_sandwich(op, Rational(5, 9));
    const Json j = certificate_to_json(std::get<SandwichCertificate>(res));
    CHECK(j.at("certified") == Json(true));
    CHECK(j.at("ratio") == Json("9/5"));
    CHECK(j.at("r_inner") == Json("5/9"));
    CHECK(qmatrix_from_json(j.at("matrix")) == nice_base_matrix());

    auto bad = certify_sandwich(op, Rational(3, 5));
    const Json f = failure_to_json(std::get<CertificationFailure>(bad));
    CHECK(f.at("certified") == Json(false));
    CHECK(f.at("inclusion") == Json("inner"));
    // the reported pair reproduces the violation exactly
    const QVector vertex = qvector_from_json(f.at("vertex"));
    const QVector normal = qvector_from_json(f.at("halfspace").at("normal"));
    const Rational offset = rational_from_json(f.at("halfspace").at("offset"));
    CHECK(qvec_dot(normal, vertex) > offset);
}

TEST_CASE("search report json is well formed") {
    SearchConfig cfg;
    cfg.n = 2;
    cfg.restarts = 3;
    cfg.max_iters = 400;
    cfg.seed = 5;
    const Json j = search_report_to_json(optimize(cfg));
    CHECK(j.at("n") == Json(2));
    CHECK(j.at("theorem_bound") == Json("1/1"));
    CHECK(j.at("trace").size() == 3);
    CHECK(j.contains("exact_ratio"));
}
