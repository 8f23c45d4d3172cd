#include <set>

#include "doctest.h"

#include "bm/equidistant.hpp"
#include "bm/errors.hpp"
#include "test_helpers.hpp"

using namespace bm;

namespace {

VPolytope unit_square() {
    return convex_hull_2d({{Rational(1), Rational(1)},
                           {Rational(-1), Rational(1)},
                           {Rational(-1), Rational(-1)},
                           {Rational(1), Rational(-1)}});
}

VPolytope affine_hexagon() {
    return convex_hull_2d({{Rational(1), Rational(0)},
                           {Rational(0), Rational(1)},
                           {Rational(1), Rational(1)},
                           {Rational(-1), Rational(0)},
                           {Rational(0), Rational(-1)},
                           {Rational(-1), Rational(-1)}});
}

VPolytope rational_octagon() {
    return convex_hull_2d({{Rational(2), Rational(1)},
                           {Rational(1), Rational(2)},
                           {Rational(-1), Rational(2)},
                           {Rational(-2), Rational(1)},
                           {Rational(-2), Rational(-1)},
                           {Rational(-1), Rational(-2)},
                           {Rational(1), Rational(-2)},
                           {Rational(2), Rational(-1)}});
}

std::array<Rational, 3> valid_k_grid(const Rational& r) {
    const Rational lo = Rational(1) / (2 * r);
    const Rational hi = Rational(2) - Rational(3) / r;
    return {lo, (lo + hi) / 2, hi};
}

const std::array<Rational, 5> kGridR{Rational(7, 4), Rational(16, 9), Rational(9, 5),
                                     Rational(11, 6), Rational(15, 8)};

}  // namespace

TEST_CASE("pentagon K(9/5, 1/3) has the expected exact vertices") {
    const VPolytope pent = pentagon(PentagonParams{Rational(9, 5), Rational(1, 3)});
    const std::vector<QVector> expected{{Rational(-3), Rational(-1)},
                                        {Rational(-2), Rational(-4, 3)},
                                        {Rational(2), Rational(-4, 3)},
                                        {Rational(3), Rational(-1)},
                                        {Rational(0), Rational(2)}};
    CHECK(pent.vertices == expected);
}

TEST_CASE("r = 2 degenerates to the basis triangle for any valid k") {
    for (const Rational& k : {Rational(1, 2), Rational(1, 4), Rational(3, 8)}) {
        const VPolytope p = pentagon(PentagonParams{Rational(2), k});
        CHECK(p.vertices.size() == 3);
        const auto& basis = UBasis::standard();
        std::set<QVector> verts(p.vertices.begin(), p.vertices.end());
        CHECK(verts == std::set<QVector>{basis.u1, basis.u2, basis.u3});
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((PentagonParams{Rational(3, 2), Rational(1, 3)}.validate()), InvalidParams);
    CHECK_THROWS_AS((PentagonParams{Rational(9, 5), Rational(1, 4)}.validate()), InvalidParams);
    CHECK_THROWS_AS((PentagonParams{Rational(9, 5), Rational(1, 2)}.validate()), InvalidParams);
    // at r = 7/4 the k-interval collapses to the single point 2/7
    CHECK_NOTHROW((PentagonParams{Rational(7, 4), Rational(2, 7)}.validate()));
    CHECK_THROWS_AS(
        (PentagonParams{Rational(7, 4), Rational(2, 7) + Rational(1, 1000)}.validate()),
        InvalidParams);
}

TEST_CASE("construction conditions hold across the parameter grid") {
    for (const Rational& r : kGridR) {
        for (const Rational& k : valid_k_grid(r)) {
            const PentagonParams params{r, k};
            const VPolytope p = pentagon(params);
            const PentagonConditions cond = check_pentagon_conditions(p, params);
            CHECK(cond.triangle_inside);
            CHECK(cond.inside_quadrilateral);
            CHECK(cond.segment_on_boundary);
            CHECK(cond.reflection_symmetric);
        }
    }
}

TEST_CASE("boundary segment sits on the pentagon edge at k = 1/(2r)") {
    const PentagonParams params{Rational(7, 4), Rational(2, 7)};
    const VPolytope p = pentagon(params);
    CHECK(p.vertices.size() == 5);
    const auto [y, x] = pentagon_segment(params);
    // both endpoints are hull vertices and consecutive
    int yi = -1, xi = -1;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (p.vertices[i] == y) yi = static_cast<int>(i);
        if (p.vertices[i] == x) xi = static_cast<int>(i);
    }
    REQUIRE(yi >= 0);
    REQUIRE(xi >= 0);
    const int m = static_cast<int>(p.vertices.size());
    CHECK(((yi + 1) % m == xi || (xi + 1) % m == yi));
}

TEST_CASE("max_area_triangle by exhaustive exact comparison") {
    const VPolytope hex = affine_hexagon();
    const auto tri = max_area_triangle(hex);
    const Rational area2 = rat_abs(cross2(hex.vertices[tri[0]], hex.vertices[tri[1]],
                                          hex.vertices[tri[2]]));
    CHECK(area2 == 3);  // area 3/2

    const VPolytope sq = unit_square();
    const auto sq_tri = max_area_triangle(sq);
    CHECK(rat_abs(cross2(sq.vertices[sq_tri[0]], sq.vertices[sq_tri[1]],
                         sq.vertices[sq_tri[2]])) == 4);  // area 2
    CHECK(sq_tri == std::array<int, 3>{0, 1, 2});  // lexicographic tie-break

    const VPolytope tri_in =
        convex_hull_2d({{Rational(0), Rational(2)}, {Rational(-3), Rational(-1)},
                        {Rational(3), Rational(-1)}});
    CHECK(max_area_triangle(tri_in) == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("normalize_to_basis maps the relabeled triangle onto (u1, u2, u3)") {
    const auto& basis = UBasis::standard();
    const VPolytope sq = unit_square();
    const auto tri = max_area_triangle(sq);
    const NormalizationResult norm = normalize_to_basis(sq, tri);
    CHECK(norm.map(sq.vertices[norm.relabeled[0]]) == basis.u1);
    CHECK(norm.map(sq.vertices[norm.relabeled[1]]) == basis.u2);
    CHECK(norm.map(sq.vertices[norm.relabeled[2]]) == basis.u3);
    CHECK(is_centrally_symmetric(norm.l0));
}

TEST_CASE("normalization of the parallelogram conv{u1,u2,u3,-2u1}") {
    // this parallelogram (center -u1/2) has the basis triangle among its
    // vertices; all four vertex triples tie at half the total area
    const auto& basis = UBasis::standard();
    const VPolytope par = convex_hull_2d(
        {basis.u1, basis.u2, basis.u3, qvec_scale(Rational(-2), basis.u1)});
    CHECK(is_centrally_symmetric(par));
    CHECK(vertex_centroid(par) == qvec_scale(Rational(-1, 2), basis.u1));
    const auto tri = max_area_triangle(par);
    const NormalizationResult norm = normalize_to_basis(par, tri);
    CHECK(norm.map(par.vertices[norm.relabeled[0]]) == basis.u1);
    CHECK(norm.map(par.vertices[norm.relabeled[1]]) == basis.u2);
    CHECK(norm.map(par.vertices[norm.relabeled[2]]) == basis.u3);
    // the normalized copy is sandwich-compatible for the whole family
    const PentagonParams params{Rational(9, 5), Rational(1, 3)};
    const EquidistanceCertificate cert = certify_equidistance(params, par);
    CHECK(cert.as_check.as_value == params.r);
}

TEST_CASE("normalize_to_basis rejects non-symmetric bodies") {
    const VPolytope tri = convex_hull_2d({{Rational(0), Rational(2)},
                                          {Rational(-3), Rational(-1)},
                                          {Rational(3), Rational(-1)}});
    CHECK_THROWS_AS(normalize_to_basis(tri, {0, 1, 2}), NotSymmetric);
}

TEST_CASE("equidistance certificates against the standard symmetric bodies") {
    Rng rng(4242);
    const std::array<VPolytope, 3> bodies{unit_square(), affine_hexagon(), rational_octagon()};
    for (const Rational& r : kGridR) {
        for (const Rational& k : valid_k_grid(r)) {
            const PentagonParams params{r, k};
            for (const auto& body : bodies) {
                const EquidistanceCertificate cert = certify_equidistance(params, body);
                CHECK(cert.as_check.as_value == r);
                CHECK(cert.as_check.center == pentagon_center(params));
            }
            const EquidistanceCertificate random_cert =
                certify_equidistance(params, testing::random_symmetric_polygon(rng, 5));
            CHECK(random_cert.as_check.as_value == r);
        }
    }
}

TEST_CASE("parallel side-diagonal pair and its squared ratio") {
    CHECK(parallel_pair_ratio(pentagon(PentagonParams{Rational(9, 5), Rational(1, 3)})) ==
          Rational(4, 9));
    CHECK(parallel_pair_ratio(pentagon(PentagonParams{Rational(9, 5), Rational(5, 18)})) ==
          Rational(25, 81));
    CHECK_THROWS_AS(parallel_pair_ratio(pentagon(PentagonParams{Rational(2), Rational(1, 2)})),
                    NoParallelPair);
    // the affinely regular hexagon has three side/long-diagonal pairs
    CHECK_THROWS_AS(parallel_pair_ratio(affine_hexagon()), MultiplePairs);
}

TEST_CASE("the pentagon edge form has one halfspace per edge") {
    const HPolytope h = polygon_to_h(pentagon(PentagonParams{Rational(9, 5), Rational(1, 3)}));
    CHECK(h.halfspaces.size() == 5);
}

TEST_CASE("parallel ratios separate distinct k at fixed r") {
    const Rational r(9, 5);
    const Rational lo = Rational(1) / (2 * r);
    const Rational hi = Rational(2) - Rational(3) / r;
    std::set<Rational> seen;
    for (int i = 0; i < 10; ++i) {
        const Rational k = lo + (hi - lo) * Rational(i, 9);
        seen.insert(parallel_pair_ratio(pentagon(PentagonParams{r, k})));
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("the construction is equivariant in the basis choice") {
    // any invertible linear image of the standard triple is a legal basis;
    // asymmetry is affine-invariant, so as(K) = r must survive the change
    const auto& std_basis = UBasis::standard();
    const QMatrix a(2, {Rational(1), Rational(1), Rational(0), Rational(1)});
    UBasis sheared{a.apply(std_basis.u1), a.apply(std_basis.u2), a.apply(std_basis.u3)};
    sheared.validate();
    const PentagonParams params{Rational(9, 5), Rational(1, 3)};
    const VPolytope k = pentagon(params, sheared);
    CHECK(asymmetry(k).as_value == params.r);
    CHECK(asymmetry(k).center == pentagon_center(params, sheared));
    CHECK(check_pentagon_conditions(k, params, sheared).all());
    const EquidistanceCertificate cert =
        certify_equidistance(params, affine_hexagon(), sheared);
    CHECK(cert.as_check.as_value == params.r);
}

TEST_CASE("homothety maps the pentagon onto the expected outer body") {
    const PentagonParams params{Rational(9, 5), Rational(1, 3)};
    const VPolytope k = pentagon(params);
    const VPolytope k_prime = homothety(k, pentagon_center(params), -params.r);
    // u1 maps to -2 u1, a vertex of the outer body
    const auto& basis = UBasis::standard();
    bool found = false;
    for (const auto& v : k_prime.vertices) {
        if (v == qvec_scale(Rational(-2), basis.u1)) found = true;
    }
    CHECK(found);
    CHECK(v_in_h(k, polygon_to_h(k_prime)));
}
