#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bm/linalg.hpp"

namespace bm {

/// Polytope as a vertex list. For 2D ordered-polygon uses the vertices are
/// in strictly counterclockwise convex position.
struct VPolytope {
    int n = 0;
    std::vector<QVector> vertices;
};

/// Halfspace <normal, x> <= offset.
struct Halfspace {
    QVector normal;
    Rational offset;
};

/// Polytope as an intersection of halfspaces.
struct HPolytope {
    int n = 0;
    std::vector<Halfspace> halfspaces;
};

/// Unit cube C_n: vertices {±1}^n, facets ±<e_i, x> <= 1. Requires 2 <= n <= 8.
std::pair<VPolytope, HPolytope> cube(int n);

/// Cross-polytope C_n*: vertices {±e_i}, facets <eps, x> <= 1 for eps in {±1}^n.
std::pair<VPolytope, HPolytope> cross_polytope(int n);

/// Exact containment: every vertex satisfies every halfspace with <=.
bool v_in_h(const VPolytope& inner, const HPolytope& outer);

struct ContainmentViolation {
    int vertex_index = -1;
    int halfspace_index = -1;
};

/// Lexicographically first violating (vertex, halfspace) pair, if any.
std::optional<ContainmentViolation> find_violation(const VPolytope& inner, const HPolytope& outer);

/// Edge halfspaces of a counterclockwise convex polygon, one per edge, in
/// edge order. Throws NotConvex if the input is not in strictly ccw convex
/// position.
HPolytope polygon_to_h(const VPolytope& polygon);

/// Exact 2D convex hull (monotone chain), counterclockwise, interior and
/// duplicate points removed, no three collinear output points.
/// Throws Degenerate when all points are collinear or fewer than 3 given.
VPolytope convex_hull_2d(const std::vector<QVector>& points);

VPolytope scale_vpolytope(const Rational& factor, const VPolytope& p);

/// Vertex set closed under x -> 2s - x for the vertex centroid s.
bool is_centrally_symmetric(const VPolytope& p);

/// Centroid of the vertex set; equals the symmetry center when
/// is_centrally_symmetric holds.
QVector vertex_centroid(const VPolytope& p);

}  // namespace bm
