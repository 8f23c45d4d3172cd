#pragma once

#include <variant>
#include <vector>

#include "bm/polytope.hpp"

namespace bm {

/// Invertible linear operator with its cached exact inverse.
struct OperatorT {
    QMatrix T;
    QMatrix Tinv;
    int n = 0;

    /// Throws SingularMatrix when det = 0; verifies T * Tinv = I exactly.
    static OperatorT from_matrix(QMatrix m);
};

/// Image T(C_n*) as a vertex list: ±T e_i in column order.
VPolytope operator_image_v(const OperatorT& op);

/// Image T(C_n*) as the 2^n halfspaces <(T^-1)^T eps, x> <= 1, eps in {±1}^n.
/// No redundancy removal (n <= 4 keeps this at <= 16 facets).
HPolytope operator_image_h(const OperatorT& op);

/// Smallest rho with T(C_n*) ⊆ rho C_n: the largest column sup-norm of T.
Rational outer_radius(const OperatorT& op);

/// Largest r with r C_n ⊆ T(C_n*): 1 / max over cube vertices v of |T^-1 v|_1.
Rational inner_radius(const OperatorT& op);

/// outer_radius / inner_radius; an upper bound on d_BM(C_n, C_n*) and always >= 1.
Rational ratio(const OperatorT& op);

struct SandwichWitnesses {
    QVector cube_vertex;  // maximizes |T^-1 v|_1
    int column_index = 0;  // maximizes |T e_i|_inf
};

/// Exact verified record of r C_n ⊆ T(C_n*) ⊆ C_n.
struct SandwichCertificate {
    OperatorT op;
    Rational r_requested;
    Rational r_inner;
    Rational r_outer;
    Rational ratio;  // r_outer / r_inner
    SandwichWitnesses witnesses;
};

struct CertificationFailure {
    std::string inclusion;  // "inner" or "outer"
    int vertex_index = -1;
    int halfspace_index = -1;
    QVector vertex;
    Halfspace halfspace;
};

using CertifyResult = std::variant<SandwichCertificate, CertificationFailure>;

/// Succeeds iff r <= inner_radius(T) and outer_radius(T) <= 1; both
/// inclusions are then independently re-verified vertex-against-halfspace.
/// On failure carries the lexicographically first violating pair, inner
/// inclusion scanned first.
CertifyResult certify_sandwich(const OperatorT& op, const Rational& r);

/// The 3x3 matrix whose image is the canonical nice octahedron.
const QMatrix& nice_base_matrix();

/// All distinct matrices obtained from the base by row/column permutations
/// and row/column sign flips; exactly 192, sorted by canonical encoding.
const std::vector<QMatrix>& enumerate_nice_octahedra();

/// Geometric test: T(C_3*) has vertex set ±(a/3 + 2 b_i/3) for some cube
/// vertex a with neighbors b_i.
bool is_nice(const OperatorT& op);

/// Same predicate via exact membership in enumerate_nice_octahedra(); the
/// two implementations are cross-checked in the tests.
bool is_nice_by_membership(const OperatorT& op);

/// Scales each column by the inverse of its sup-norm; never increases ratio.
OperatorT normalize_columns(const OperatorT& op);

}  // namespace bm
