// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bm/asymmetry.hpp"
#include "bm/certify.hpp"
#include "bm/equidistant.hpp"
#include "bm/json_io.hpp"
#include "bm/lemma.hpp"
#include "bm/search.hpp"
#include "bm/util.hpp"

using namespace bm;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

QMatrix random_invertible(Rng& rng, int n) {
    for (;;) {
        QMatrix m(n);
        for (auto& e : m.entries) {
            e = Rational(BigInt(rng.uniform_int(-12, 12)), BigInt(rng.uniform_int(1, 8)));
        }
        if (mat_det(m) != 0) return m;
    }
}

VPolytope random_symmetric_polygon(Rng& rng, int points) {
    for (;;) {
        std::vector<QVector> pts;
        for (int i = 0; i < points; ++i) {
            QVector p{rng.uniform_rational(40, 7), rng.uniform_rational(40, 7)};
            pts.push_back(qvec_neg(p));
            pts.push_back(std::move(p));
        }
        try {
            VPolytope hull = convex_hull_2d(pts);
            if (hull.vertices.size() >= 4) return hull;
        } catch (const Degenerate&) {
        }
    }
}

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

const std::array<Rational, 5> kGridR{Rational(7, 4), Rational(16, 9), Rational(9, 5),
                                     Rational(11, 6), Rational(15, 8)};

std::array<Rational, 3> grid_k(const Rational& r) {
    const Rational lo = Rational(1) / (2 * r);
    const Rational hi = Rational(2) - Rational(3) / r;
    return {lo, (lo + hi) / 2, hi};
}

const QMatrix& optimal_4d(int which) {
    auto r = [](long v) { return Rational(v); };
    static const QMatrix m1(4, {r(1), r(1), r(1), r(0), r(1), r(1), r(-1), r(0),
                                r(1), r(-1), r(0), r(1), r(1), r(-1), r(0), r(-1)});
    static const QMatrix m2(4, {r(1), r(1), r(1), r(0), r(1), r(-1), r(0), r(1),
                                r(1), r(0), r(-1), r(-1), r(0), r(1), r(-1), r(1)});
    static const QMatrix m3(4, {r(1), r(1), r(1), r(-1), r(-1), r(1), r(1), r(1),
                                r(1), r(-1), r(1), r(1), r(1), r(1), r(-1), r(1)});
    switch (which) {
        case 0: return m1;
        case 1: return m2;
        default: return m3;
    }
}

void criterion1(Checker& c) {  // exact 3D optimum
    const OperatorT base = OperatorT::from_matrix(nice_base_matrix());
    c.expect(std::holds_alternative<SandwichCertificate>(certify_sandwich(base, Rational(5, 9))),
             "base matrix certifies at 5/9");
    const auto fail = certify_sandwich(base, Rational(5, 9) + Rational(1, 1000000));
    const auto* witness = std::get_if<CertificationFailure>(&fail);
    c.expect(witness != nullptr, "certification fails just above 5/9");
    if (witness) {
        c.expect(qvec_dot(witness->halfspace.normal, witness->vertex) > witness->halfspace.offset,
                 "failure carries an exact violating pair");
    }
    c.expect(ratio(base) == Rational(9, 5), "ratio is exactly 9/5");
}

void criterion2(Checker& c) {  // 192-family
    const auto& family = enumerate_nice_octahedra();
    std::set<std::string> distinct;
    for (const auto& m : family) distinct.insert(mat_encode(m));
    c.expect(family.size() == 192 && distinct.size() == 192, "exactly 192 distinct matrices");
    for (const auto& m : family) {
        const OperatorT op = OperatorT::from_matrix(m);
        if (!std::holds_alternative<SandwichCertificate>(certify_sandwich(op, Rational(5, 9)))) {
            c.expect(false, "member fails to certify at 5/9");
            return;
        }
        const Claim3dReport report = claim3d_report(op);
        if (!(report.vertices_in_v && report.at_most_one_per_cube && report.occupied == 6)) {
            c.expect(false, "member fails claim3d with 6 occupied cubes");
            return;
        }
    }
}

void criterion3(Checker& c) {  // exact 4D optimum
    for (int i = 0; i < 3; ++i) {
        const OperatorT op = OperatorT::from_matrix(optimal_4d(i));
        c.expect(
            std::holds_alternative<SandwichCertificate>(certify_sandwich(op, Rational(1, 2))),
            "4D matrix certifies at 1/2");
        c.expect(std::holds_alternative<CertificationFailure>(
                     certify_sandwich(op, Rational(1, 2) + Rational(1, 1000000))),
                 "4D certification fails just above 1/2");
        c.expect(ratio(op) == 2, "4D ratio is exactly 2");
    }
}

void criterion4(Checker& c) {  // theorem-as-oracle fuzz
    Rng rng3(40003), rng4(40004);
    for (int i = 0; i < 10000; ++i) {
        if (ratio(OperatorT::from_matrix(random_invertible(rng3, 3))) < Rational(9, 5)) {
            c.expect(false, "3D ratio below 9/5");
            return;
        }
        if (ratio(OperatorT::from_matrix(random_invertible(rng4, 4))) < 2) {
            c.expect(false, "4D ratio below 2");
            return;
        }
    }
}

void criterion5(Checker& c) {  // search reproduction
    SearchConfig cfg;
    cfg.jobs = 2;
    cfg.seed = 42;

    cfg.n = 3;
    cfg.restarts = 200;
    const SearchReport r3 = optimize(cfg);
    c.expect(r3.exact_ratio >= Rational(9, 5) &&
                 r3.exact_ratio <= Rational(9, 5) + Rational(1, 1000),
             "3D search certifies within [9/5, 9/5 + 1e-3]");
    const auto snapped = snap_to_nice(r3.best_float_matrix);
    c.expect(snapped.has_value(), "3D optimum snaps into the 192-family");
    if (snapped) {
        c.expect(is_nice_by_membership(OperatorT::from_matrix(*snapped)),
                 "snapped matrix is a family member");
    }

    cfg.n = 4;
    const SearchReport r4 = optimize(cfg);
    c.expect(r4.exact_ratio >= 2 && r4.exact_ratio <= Rational(2) + Rational(1, 1000),
             "4D search certifies within [2, 2 + 1e-3]");

    cfg.n = 2;
    cfg.restarts = 200;
    const SearchReport r2 = optimize(cfg);
    c.expect(r2.exact_ratio == 1, "2D search certifies exactly 1");
}

void criterion6(Checker& c) {  // asymmetry exactness
    c.expect(asymmetry(unit_square()).as_value == 1, "as(square) = 1");
    Rng rng(60606);
    for (int i = 0; i < 25; ++i) {
        std::vector<QVector> pts{{rng.uniform_rational(30, 7), rng.uniform_rational(30, 7)},
                                 {rng.uniform_rational(30, 7), rng.uniform_rational(30, 7)},
                                 {rng.uniform_rational(30, 7), rng.uniform_rational(30, 7)}};
        try {
            const VPolytope tri = convex_hull_2d(pts);
            if (tri.vertices.size() != 3) continue;
            if (asymmetry(tri).as_value != 2) {
                c.expect(false, "as(triangle) = 2");
                return;
            }
        } catch (const Degenerate&) {
            continue;
        }
    }
    int grid_points = 0;
    for (const auto& r : kGridR) {
        for (const auto& k : grid_k(r)) {
            const PentagonParams params{r, k};
            params.validate();
            const VPolytope pent = pentagon(params);
            const AsymmetryResult res = asymmetry(pent);
            ++grid_points;
            if (res.as_value != r || res.center != pentagon_center(params)) {
                c.expect(false, "pentagon grid asymmetry/center mismatch at r=" +
                                    rat_to_string(r) + " k=" + rat_to_string(k));
                return;
            }
            if (verify_contact_points(pent, polygon_to_h(pent), res) < 3) {
                c.expect(false, "pentagon contact count below 3");
                return;
            }
        }
    }
    c.expect(grid_points == 15, "15 grid points evaluated");
}

void criterion7(Checker& c) {  // equidistance certification
    Rng rng(70707);
    std::vector<VPolytope> bodies{unit_square(), affine_hexagon(), rational_octagon()};
    for (int i = 0; i < 100; ++i) bodies.push_back(random_symmetric_polygon(rng, 5));
    for (const auto& r : kGridR) {
        for (const auto& k : grid_k(r)) {
            const PentagonParams params{r, k};
            const Rational as = asymmetry(pentagon(params)).as_value;
            for (const auto& body : bodies) {
                try {
                    const EquidistanceCertificate cert = certify_equidistance(params, body);
                    if (cert.as_check.as_value != as || cert.params.r != as) {
                        c.expect(false, "certified ratio differs from as(K)");
                        return;
                    }
                } catch (const Error& e) {
                    c.expect(false, std::string("equidistance pipeline failed: ") + e.what());
                    return;
                }
            }
        }
    }
}

void criterion8(Checker& c) {  // lemma 2D property suite
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const Parallelogram2D par = sample_valid_parallelogram(derive_seed(8080, t), Rational(5, 9));
        if (!corner_classify(par).all_ones()) {
            c.expect(false, "sampled parallelogram violates one-per-corner");
            return;
        }
    }
    const auto found = find_lemma_counterexample(Rational(1, 2), 4242);
    c.expect(found.has_value(), "counterexample found at r = 1/2");
    if (found) {
        c.expect(check_square_sandwich(*found, Rational(1, 2)) &&
                     !corner_classify(*found).all_ones(),
                 "counterexample verifies");
    }
    c.expect(!find_lemma_counterexample(Rational(5, 9), 4242, 1000000).has_value(),
             "no counterexample at 5/9 in 1e6 attempts");
}

void criterion9(Checker& c) {  // affine-invariance suite
    Rng rng(90909);
    std::vector<VPolytope> bodies{
        convex_hull_2d({{Rational(0), Rational(2)}, {Rational(-3), Rational(-1)},
                        {Rational(3), Rational(-1)}}),
        unit_square(),
        pentagon(PentagonParams{Rational(9, 5), Rational(1, 3)}),
        pentagon(PentagonParams{Rational(7, 4), Rational(2, 7)}),
        pentagon(PentagonParams{Rational(15, 8), Rational(3, 10)})};
    std::vector<AsymmetryResult> base;
    base.reserve(bodies.size());
    for (const auto& body : bodies) base.push_back(asymmetry(body));
    for (int round = 0; round < 1000; ++round) {
        const QMatrix a = random_invertible(rng, 2);
        const QVector t{rng.uniform_rational(9, 4), rng.uniform_rational(9, 4)};
        const std::size_t pick = round % bodies.size();
        const AsymmetryResult mapped = asymmetry(affine_image(bodies[pick], a, t));
        if (mapped.as_value != base[pick].as_value ||
            mapped.center != qvec_add(a.apply(base[pick].center), t)) {
            c.expect(false, "affine map changed as or center");
            return;
        }
    }
    std::set<Rational> ratios;
    const Rational r(9, 5);
    const Rational lo = Rational(1) / (2 * r);
    const Rational hi = Rational(2) - Rational(3) / r;
    for (int i = 0; i < 10; ++i) {
        const Rational k = lo + (hi - lo) * Rational(i, 9);
        ratios.insert(parallel_pair_ratio(pentagon(PentagonParams{r, k})));
    }
    c.expect(ratios.size() == 10, "parallel-pair ratios separate 10 distinct k values");
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact 3D optimum (5/9 certificate, epsilon failure, ratio 9/5)", 1.0, criterion1},
        {2, "192-matrix family certifies and localizes (6 of 8 cubes)", 5.0, criterion2},
        {3, "exact 4D optimum for the three operators (ratio 2)", 1.0, criterion3},
        {4, "theorem-as-oracle fuzz, 10000 matrices per dimension", 120.0, criterion4},
        {5, "search reproduction (n = 3, 4, 2) with exact re-certification", 600.0, criterion5},
        {6, "asymmetry exactness on square, triangles, 15-point pentagon grid", 30.0, criterion6},
        {7, "equidistance certificates against 103 symmetric bodies", 120.0, criterion7},
        {8, "corner-square suite: 10000 samples, counterexample search", 300.0, criterion8},
        {9, "affine invariance (1000 maps) and k-separation", 60.0, criterion9},
    };

    int failed = 0;
    double total = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += seconds;
        if (seconds >= criterion.budget_seconds) {
            checker.expect(false, "runtime budget exceeded");
        }
        const bool ok = checker.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %d (%6.2f s, budget %.0f s): %s\n", ok ? "PASS" : "FAIL",
                    criterion.id, seconds, criterion.budget_seconds, criterion.name.c_str());
        for (const auto& reason : checker.failures) {
            std::printf("       - %s\n", reason.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d/9 criteria passed, total %.2f s\n", 9 - failed, total);
    return failed == 0 ? 0 : 1;
}
