#pragma once

#include <utility>
#include <vector>

#include "bm/lp.hpp"
#include "bm/polytope.hpp"

namespace bm {

/// Exact asymmetry constant as(K), Minkowski center z, and the tight
/// (vertex, facet) pairs at the optimum.
struct AsymmetryResult {
    Rational as_value;
    Rational lambda;  // 1 / as
    QVector center;
    std::vector<std::pair<int, int>> tight_pairs;  // (vertex index, facet index)
    bool center_unique = false;  // verified via the optimal-face dimension in 2D
};

/// Computes as(K) and the Minkowski center by one exact LP in (w, lambda):
/// maximize lambda s.t. <a_i, w> - lambda <a_i, v_j> <= b_i for all facets i
/// and vertices j; then as = 1/lambda*, z = w*/(1 + lambda*).
/// Both representations must describe the same bounded full-dimensional
/// polytope; throws InconsistentRepresentations / DegenerateBody otherwise.
AsymmetryResult asymmetry(const VPolytope& k_v, const HPolytope& k_h);

/// 2D convenience: derives the halfspace form with polygon_to_h.
AsymmetryResult asymmetry(const VPolytope& polygon);

/// Feasibility of the asymmetry system at a fixed lambda; false just above
/// lambda* certifies optimality of the LP value from the other side.
bool asymmetry_feasible(const VPolytope& k_v, const HPolytope& k_h, const Rational& lambda);

/// Number of distinct contact points between bd(K - z) and bd(-as (K - z)).
/// At least 3 for non-symmetric planar K.
int verify_contact_points(const VPolytope& k_v, const HPolytope& k_h,
                          const AsymmetryResult& result);

/// Recomputes asymmetry after x -> A x + t and checks that the constant is
/// unchanged and the centers correspond under the map.
bool asymmetry_affine_invariance_check(const VPolytope& k, const QMatrix& a, const QVector& t);

/// Applies x -> A x + t to a polygon, restoring ccw orientation.
VPolytope affine_image(const VPolytope& polygon, const QMatrix& a, const QVector& t);

}  // namespace bm
