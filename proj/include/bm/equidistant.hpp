#pragma once

#include <array>

#include "bm/asymmetry.hpp"
#include "bm/polytope.hpp"

namespace bm {

/// Rational stand-in for the equilateral triple: u1 + u2 + u3 = 0 and the
/// triple spans the plane. Every certified quantity downstream (asymmetry,
/// distances, containments) is invariant under invertible linear maps, so
/// fixing this rational image of the equilateral configuration keeps all
/// arithmetic exact. Default: (0,2), (-3,-1), (3,-1).
struct UBasis {
    QVector u1, u2, u3;

    static const UBasis& standard();
    void validate() const;  // throws InvalidParams
};

/// Parameters of the pentagon family: 7/4 <= r <= 2, 1/(2r) <= k <= 2 - 3/r.
struct PentagonParams {
    Rational r;
    Rational k;

    void validate() const;  // throws InvalidParams
};

/// K(r, k) = conv{u1, u2, u3, ((r-3)/r + k)u1 + 2k u2, ((r-3)/r + k)u1 + 2k u3},
/// in ccw order; degenerates to conv{u1,u2,u3} exactly at r = 2.
VPolytope pentagon(const PentagonParams& params, const UBasis& basis = UBasis::standard());

/// The two extra pentagon vertices (the boundary segment endpoints):
/// first the u2-side point, then the u3-side point.
std::pair<QVector, QVector> pentagon_segment(const PentagonParams& params,
                                             const UBasis& basis = UBasis::standard());

struct PentagonConditions {
    bool triangle_inside = false;       // conv{u1,u2,u3} ⊆ K
    bool inside_quadrilateral = false;  // K ⊆ conv{-u1, u1, u2, u3}
    bool segment_on_boundary = false;   // the condition-2 segment is a K edge (or lies in one)
    bool reflection_symmetric = false;  // vertex set invariant under the u2<->u3 reflection

    bool all() const {
        return triangle_inside && inside_quadrilateral && segment_on_boundary &&
               reflection_symmetric;
    }
};

/// Decidable checks of the three construction conditions for a candidate body.
PentagonConditions check_pentagon_conditions(const VPolytope& k, const PentagonParams& params,
                                             const UBasis& basis = UBasis::standard());

/// Maximum-area triangle with vertices among the polygon's vertices, by
/// exhaustive exact comparison; ties break to the lexicographically smallest
/// index triple. Returns vertex indices.
std::array<int, 3> max_area_triangle(const VPolytope& polygon);

struct AffineMap {
    QMatrix a;
    QVector t;

    QVector operator()(const QVector& x) const { return qvec_add(a.apply(x), t); }
};

struct NormalizationResult {
    VPolytope l0;                  // T(L), ccw
    AffineMap map;                 // the affine T with T(a)=u1, T(b)=u2, T(c)=u3
    std::array<int, 3> relabeled;  // triangle indices after the cyclic relabeling
};

/// Relabels (a,b,c) cyclically so that the symmetry center of L lies in
/// conv{g,b,c} (g the centroid; ties resolved in the fixed order (g,b,c),
/// (g,c,a), (g,a,b)), then maps the triangle onto (u1,u2,u3).
/// Throws NotSymmetric when L has no center.
NormalizationResult normalize_to_basis(const VPolytope& l, const std::array<int, 3>& triangle,
                                       const UBasis& basis = UBasis::standard());

/// Homothety x -> center + ratio (x - center); reorders to ccw.
VPolytope homothety(const VPolytope& p, const QVector& center, const Rational& ratio);

/// The Minkowski center of K(r, k): ((r-2)/(r+1)) u1.
QVector pentagon_center(const PentagonParams& params, const UBasis& basis = UBasis::standard());

struct EquidistanceCertificate {
    PentagonParams params;
    VPolytope k;        // the pentagon K(r, k)
    VPolytope k_prime;  // homothety of K about its center with ratio -r
    VPolytope l;        // the symmetric body under test
    std::array<int, 3> triangle;
    AffineMap map;
    VPolytope l0;  // normalized affine image of L with K ⊆ L0 ⊆ K'
    AsymmetryResult as_check;
};

/// Runs the constructive pipeline (max-area triangle, relabeling, affine
/// normalization) and verifies K ⊆ L0 ⊆ K' exactly, plus as(K) = r.
/// Together these certify d_BM(K, L) = r. Inclusion failures (impossible for
/// valid inputs) throw InclusionFailure with the violating pair.
EquidistanceCertificate certify_equidistance(const PentagonParams& params, const VPolytope& l,
                                             const UBasis& basis = UBasis::standard());

/// Squared length ratio of the unique parallel (side, diagonal) pair of a
/// nondegenerate K(r, k) pentagon; affine-invariant. Throws NoParallelPair /
/// MultiplePairs when the input lacks exactly one such pair.
Rational parallel_pair_ratio(const VPolytope& pentagon);

}  // namespace bm
