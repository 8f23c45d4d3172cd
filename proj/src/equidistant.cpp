#include "bm/equidistant.hpp"

#include <algorithm>

#include "bm/errors.hpp"

namespace bm {

const UBasis& UBasis::standard() {
    static const UBasis basis = [] {
        UBasis b{{Rational(0), Rational(2)},
                 {Rational(-3), Rational(-1)},
                 {Rational(3), Rational(-1)}};
        b.validate();
        return b;
    }();
    return basis;
}

void UBasis::validate() const {
    if (u1.size() != 2 || u2.size() != 2 || u3.size() != 2) {
        throw InvalidParams("basis vectors must be planar");
    }
    if (qvec_add(qvec_add(u1, u2), u3) != QVector{Rational(0), Rational(0)}) {
        throw InvalidParams("basis must satisfy u1 + u2 + u3 = 0");
    }
    if (u2[0] * u3[1] - u2[1] * u3[0] == 0) {
        throw InvalidParams("basis must span the plane");
    }
}

void PentagonParams::validate() const {
    if (r < Rational(7, 4) || r > 2) {
        throw InvalidParams("pentagon parameter r must lie in [7/4, 2]");
    }
    if (k < Rational(1) / (2 * r) || k > Rational(2) - Rational(3) / r) {
        throw InvalidParams("pentagon parameter k must lie in [1/(2r), 2 - 3/r]");
    }
}

std::pair<QVector, QVector> pentagon_segment(const PentagonParams& params, const UBasis& basis) {
    params.validate();
    const Rational coeff = (params.r - 3) / params.r + params.k;
    const QVector scaled_u1 = qvec_scale(coeff, basis.u1);
    return {qvec_add(scaled_u1, qvec_scale(2 * params.k, basis.u2)),
            qvec_add(scaled_u1, qvec_scale(2 * params.k, basis.u3))};
}

VPolytope pentagon(const PentagonParams& params, const UBasis& basis) {
    const auto [y, x] = pentagon_segment(params, basis);
    return convex_hull_2d({basis.u1, basis.u2, basis.u3, y, x});
}

QVector pentagon_center(const PentagonParams& params, const UBasis& basis) {
    return qvec_scale((params.r - 2) / (params.r + 1), basis.u1);
}

PentagonConditions check_pentagon_conditions(const VPolytope& k, const PentagonParams& params,
                                             const UBasis& basis) {
    PentagonConditions out;
    const HPolytope k_h = polygon_to_h(k);
    out.triangle_inside = v_in_h(VPolytope{2, {basis.u1, basis.u2, basis.u3}}, k_h);
    const VPolytope quad = convex_hull_2d(
        {qvec_neg(basis.u1), basis.u1, basis.u2, basis.u3});
    out.inside_quadrilateral = v_in_h(k, polygon_to_h(quad));

    const auto [y, x] = pentagon_segment(params, basis);
    bool on_edge = false;
    const std::size_t m = k.vertices.size();
    for (std::size_t i = 0; i < m && !on_edge; ++i) {
        const QVector& a = k.vertices[i];
        const QVector& b = k.vertices[(i + 1) % m];
        // both endpoints on the edge line and within the edge's hull
        if (cross2(a, b, y) == 0 && cross2(a, b, x) == 0) on_edge = true;
    }
    out.segment_on_boundary = on_edge && v_in_h(VPolytope{2, {y, x}}, k_h);

    // The symmetry of condition 3 is the linear involution swapping u2 and
    // u3 (it fixes u1 = -u2-u3 and the axis line pointwise). In the default
    // basis this is the orthogonal reflection across {<x,u2> = <x,u3>};
    // stated this way it stays correct for any linear image of the triple.
    const QMatrix from(2, {basis.u2[0], basis.u3[0], basis.u2[1], basis.u3[1]});
    const QMatrix to(2, {basis.u3[0], basis.u2[0], basis.u3[1], basis.u2[1]});
    const QMatrix involution = mat_mul(to, mat_inverse(from));
    std::vector<QVector> reflected;
    for (const auto& v : k.vertices) reflected.push_back(involution.apply(v));
    std::vector<QVector> original = k.vertices;
    std::sort(original.begin(), original.end());
    std::sort(reflected.begin(), reflected.end());
    out.reflection_symmetric = original == reflected;
    return out;
}

std::array<int, 3> max_area_triangle(const VPolytope& polygon) {
    const auto& v = polygon.vertices;
    const int m = static_cast<int>(v.size());
    if (polygon.n != 2 || m < 3) throw Degenerate("need a polygon with at least 3 vertices");
    std::array<int, 3> best{-1, -1, -1};
    Rational best_area(-1);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                const Rational area2 = rat_abs(cross2(v[i], v[j], v[k]));
                if (area2 > best_area) {  // strict: keeps the first (lex smallest) maximizer
                    best_area = area2;
                    best = {i, j, k};
                }
            }
        }
    }
    if (best_area <= 0) throw Degenerate("all vertex triples are collinear");
    return best;
}

namespace {

bool point_in_triangle(const QVector& p, const QVector& a, const QVector& b, const QVector& c) {
    const Rational orient = cross2(a, b, c);
    const Rational s1 = cross2(a, b, p);
    const Rational s2 = cross2(b, c, p);
    const Rational s3 = cross2(c, a, p);
    if (orient > 0) return s1 >= 0 && s2 >= 0 && s3 >= 0;
    return s1 <= 0 && s2 <= 0 && s3 <= 0;
}

// Affine map sending (a, b, c) to (u1, u2, u3), solved exactly in 2D.
AffineMap triangle_map(const QVector& a, const QVector& b, const QVector& c,
                       const UBasis& basis) {
    // M [b - a, c - a] = [u2 - u1, u3 - u1]
    const QVector d1 = qvec_sub(b, a);
    const QVector d2 = qvec_sub(c, a);
    QMatrix from(2, {d1[0], d2[0], d1[1], d2[1]});
    const QVector e1 = qvec_sub(basis.u2, basis.u1);
    const QVector e2 = qvec_sub(basis.u3, basis.u1);
    QMatrix to(2, {e1[0], e2[0], e1[1], e2[1]});
    QMatrix m = mat_mul(to, mat_inverse(from));
    QVector t = qvec_sub(basis.u1, m.apply(a));
    return {std::move(m), std::move(t)};
}

}  // namespace

NormalizationResult normalize_to_basis(const VPolytope& l, const std::array<int, 3>& triangle,
                                       const UBasis& basis) {
    if (!is_centrally_symmetric(l)) throw NotSymmetric("body has no center of symmetry");
    const QVector s = vertex_centroid(l);
    const QVector a = l.vertices[triangle[0]];
    const QVector b = l.vertices[triangle[1]];
    const QVector c = l.vertices[triangle[2]];
    const QVector g = qvec_scale(Rational(1, 3), qvec_add(qvec_add(a, b), c));

    std::array<int, 3> labels;
    if (point_in_triangle(s, g, b, c)) {
        labels = {triangle[0], triangle[1], triangle[2]};
    } else if (point_in_triangle(s, g, c, a)) {
        labels = {triangle[1], triangle[2], triangle[0]};
    } else if (point_in_triangle(s, g, a, b)) {
        labels = {triangle[2], triangle[0], triangle[1]};
    } else {
        throw NoContainingSubtriangle("symmetry center escapes every subtriangle");
    }

    NormalizationResult out;
    out.relabeled = labels;
    out.map = triangle_map(l.vertices[labels[0]], l.vertices[labels[1]], l.vertices[labels[2]],
                           basis);
    std::vector<QVector> mapped;
    for (const auto& v : l.vertices) mapped.push_back(out.map(v));
    out.l0 = convex_hull_2d(mapped);
    return out;
}

VPolytope homothety(const VPolytope& p, const QVector& center, const Rational& ratio) {
    std::vector<QVector> mapped;
    for (const auto& v : p.vertices) {
        mapped.push_back(qvec_add(center, qvec_scale(ratio, qvec_sub(v, center))));
    }
    return convex_hull_2d(mapped);
}

EquidistanceCertificate certify_equidistance(const PentagonParams& params, const VPolytope& l,
                                             const UBasis& basis) {
    params.validate();
    EquidistanceCertificate cert;
    cert.params = params;
    cert.l = l;
    cert.k = pentagon(params, basis);
    cert.k_prime = homothety(cert.k, pentagon_center(params, basis), -params.r);
    cert.triangle = max_area_triangle(l);
    NormalizationResult norm = normalize_to_basis(l, cert.triangle, basis);
    cert.map = norm.map;
    cert.l0 = std::move(norm.l0);

    if (auto viol = find_violation(cert.k, polygon_to_h(cert.l0))) {
        throw InclusionFailure("K ⊄ L0 at vertex " + std::to_string(viol->vertex_index) +
                               ", halfspace " + std::to_string(viol->halfspace_index));
    }
    if (auto viol = find_violation(cert.l0, polygon_to_h(cert.k_prime))) {
        throw InclusionFailure("L0 ⊄ K' at vertex " + std::to_string(viol->vertex_index) +
                               ", halfspace " + std::to_string(viol->halfspace_index));
    }
    cert.as_check = asymmetry(cert.k);
    if (cert.as_check.as_value != params.r) {
        throw Error("internal: as(K) disagrees with the construction parameter");
    }
    return cert;
}

Rational parallel_pair_ratio(const VPolytope& pentagon) {
    const auto& v = pentagon.vertices;
    const std::size_t m = v.size();
    if (pentagon.n != 2 || m < 3) throw Degenerate("need a polygon");
    // sides (i, i+1); diagonals: all other vertex pairs
    struct Segment {
        QVector dir;
        Rational len2;
    };
    std::vector<Segment> sides, diagonals;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const QVector d = qvec_sub(v[j], v[i]);
            Segment seg{d, qvec_dot(d, d)};
            if (j == i + 1 || (i == 0 && j == m - 1)) {
                sides.push_back(std::move(seg));
            } else {
                diagonals.push_back(std::move(seg));
            }
        }
    }
    int found = 0;
    Rational ratio;
    for (const auto& s : sides) {
        for (const auto& d : diagonals) {
            if (s.dir[0] * d.dir[1] - s.dir[1] * d.dir[0] == 0) {
                ++found;
                ratio = s.len2 / d.len2;
            }
        }
    }
    if (found == 0) throw NoParallelPair("no side is parallel to a diagonal");
    if (found > 1) throw MultiplePairs("more than one parallel side-diagonal pair");
    return ratio;
}

}  // namespace bm
