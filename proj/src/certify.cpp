#include "bm/certify.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "bm/errors.hpp"

namespace bm {

OperatorT OperatorT::from_matrix(QMatrix m) {
    OperatorT op;
    op.n = m.n;
    op.Tinv = mat_inverse(m);  // throws SingularMatrix
    op.T = std::move(m);
    if (mat_mul(op.T, op.Tinv) != QMatrix::identity(op.n)) {
        throw Error("internal: inverse verification failed");
    }
    return op;
}

VPolytope operator_image_v(const OperatorT& op) {
    VPolytope v{op.n, {}};
    for (int sign : {1, -1}) {
        for (int i = 0; i < op.n; ++i) {
            QVector col = op.T.column(i);
            v.vertices.push_back(sign > 0 ? col : qvec_neg(col));
        }
    }
    return v;
}

HPolytope operator_image_h(const OperatorT& op) {
    // x in T(C*)  <=>  |T^-1 x|_1 <= 1  <=>  <eps, T^-1 x> <= 1 for all eps.
    const QMatrix tinv_t = mat_transpose(op.Tinv);
    HPolytope h{op.n, {}};
    for (int mask = 0; mask < (1 << op.n); ++mask) {
        QVector eps(op.n);
        for (int i = 0; i < op.n; ++i) eps[i] = (mask >> i) & 1 ? 1 : -1;
        h.halfspaces.push_back({tinv_t.apply(eps), Rational(1)});
    }
    return h;
}

Rational outer_radius(const OperatorT& op) {
    Rational best;
    for (int j = 0; j < op.n; ++j) {
        Rational v = qvec_norm_inf(op.T.column(j));
        if (v > best) best = v;
    }
    return best;
}

namespace {

// Max of |T^-1 v|_1 over cube vertices v together with the maximizing vertex.
std::pair<Rational, QVector> max_inv_image_norm1(const OperatorT& op) {
    Rational best(-1);
    QVector best_vertex;
    for (int mask = 0; mask < (1 << op.n); ++mask) {
        QVector v(op.n);
        for (int i = 0; i < op.n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
        Rational norm = qvec_norm1(op.Tinv.apply(v));
        if (norm > best) {
            best = norm;
            best_vertex = std::move(v);
        }
    }
    return {best, best_vertex};
}

int argmax_column_norm(const OperatorT& op) {
    int best_j = 0;
    Rational best(-1);
    for (int j = 0; j < op.n; ++j) {
        Rational v = qvec_norm_inf(op.T.column(j));
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    return best_j;
}

}  // namespace

Rational inner_radius(const OperatorT& op) {
    return Rational(1) / max_inv_image_norm1(op).first;
}

Rational ratio(const OperatorT& op) { return outer_radius(op) / inner_radius(op); }

CertifyResult certify_sandwich(const OperatorT& op, const Rational& r) {
    if (r <= 0) throw InvalidParams("sandwich radius must be positive");
    const auto [cube_v, cube_h] = cube(op.n);
    // Inner inclusion r C_n ⊆ T(C_n*), scanned first.
    const HPolytope image_h = operator_image_h(op);
    const VPolytope scaled_cube = scale_vpolytope(r, cube_v);
    if (auto viol = find_violation(scaled_cube, image_h)) {
        return CertificationFailure{"inner", viol->vertex_index, viol->halfspace_index,
                                    scaled_cube.vertices[viol->vertex_index],
                                    image_h.halfspaces[viol->halfspace_index]};
    }
    // Outer inclusion T(C_n*) ⊆ C_n.
    const VPolytope image_v = operator_image_v(op);
    if (auto viol = find_violation(image_v, cube_h)) {
        return CertificationFailure{"outer", viol->vertex_index, viol->halfspace_index,
                                    image_v.vertices[viol->vertex_index],
                                    cube_h.halfspaces[viol->halfspace_index]};
    }
    auto [max_norm, witness_vertex] = max_inv_image_norm1(op);
    SandwichCertificate cert;
    cert.op = op;
    cert.r_requested = r;
    cert.r_inner = Rational(1) / max_norm;
    cert.r_outer = outer_radius(op);
    cert.ratio = cert.r_outer / cert.r_inner;
    cert.witnesses = {std::move(witness_vertex), argmax_column_norm(op)};
    return cert;
}

const QMatrix& nice_base_matrix() {
    static const QMatrix base(3, {Rational(1, 3), Rational(-1), Rational(-1),  //
                                  Rational(-1), Rational(1, 3), Rational(-1),  //
                                  Rational(-1), Rational(-1), Rational(1, 3)});
    return base;
}

namespace {

// All signed 3x3 permutation actions: (perm, sign mask).
struct SignedPerm {
    std::array<int, 3> perm;
    std::array<int, 3> sign;
};

std::vector<SignedPerm> signed_perms3() {
    std::vector<SignedPerm> out;
    std::array<int, 3> p{0, 1, 2};
    do {
        for (int mask = 0; mask < 8; ++mask) {
            SignedPerm sp;
            sp.perm = p;
            for (int i = 0; i < 3; ++i) sp.sign[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(sp);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

const std::vector<QMatrix>& enumerate_nice_octahedra() {
    static const std::vector<QMatrix> family = [] {
        const QMatrix& base = nice_base_matrix();
        const auto actions = signed_perms3();
        std::map<std::string, QMatrix> seen;
        for (const auto& row_op : actions) {
            // rows permuted and sign-flipped
            QMatrix rowed(3);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    rowed.at(i, j) = Rational(row_op.sign[i]) * base.at(row_op.perm[i], j);
                }
            }
            for (const auto& col_op : actions) {
                QMatrix m(3);
                for (int j = 0; j < 3; ++j) {
                    for (int i = 0; i < 3; ++i) {
                        m.at(i, j) = Rational(col_op.sign[j]) * rowed.at(i, col_op.perm[j]);
                    }
                }
                seen.emplace(mat_encode(m), std::move(m));
            }
        }
        std::vector<QMatrix> out;
        out.reserve(seen.size());
        for (auto& [key, m] : seen) out.push_back(std::move(m));
        return out;
    }();
    return family;
}

namespace {

// Unordered exact comparison of {±u_1, ±u_2, ±u_3} vertex sets: compare the
// sign-canonical representatives (first nonzero coordinate positive).
std::vector<QVector> sign_canonical_sorted(std::vector<QVector> vecs) {
    for (auto& v : vecs) {
        for (const auto& c : v) {
            if (c != 0) {
                if (c < 0) v = qvec_neg(v);
                break;
            }
        }
    }
    std::sort(vecs.begin(), vecs.end());
    return vecs;
}

}  // namespace

bool is_nice(const OperatorT& op) {
    if (op.n != 3) throw InvalidParams("is_nice is defined for n = 3");
    const auto image = sign_canonical_sorted({op.T.column(0), op.T.column(1), op.T.column(2)});
    for (int mask = 0; mask < 8; ++mask) {
        QVector a(3);
        for (int i = 0; i < 3; ++i) a[i] = (mask >> i) & 1 ? 1 : -1;
        std::vector<QVector> expected;
        for (int i = 0; i < 3; ++i) {
            QVector b = a;  // neighbor of a across coordinate i
            b[i] = -b[i];
            expected.push_back(
                qvec_add(qvec_scale(Rational(1, 3), a), qvec_scale(Rational(2, 3), b)));
        }
        if (sign_canonical_sorted(std::move(expected)) == image) return true;
    }
    return false;
}

bool is_nice_by_membership(const OperatorT& op) {
    if (op.n != 3) throw InvalidParams("is_nice is defined for n = 3");
    const std::string key = mat_encode(op.T);
    const auto& family = enumerate_nice_octahedra();
    return std::any_of(family.begin(), family.end(),
                       [&key](const QMatrix& m) { return mat_encode(m) == key; });
}

OperatorT normalize_columns(const OperatorT& op) {
    QMatrix m = op.T;
    for (int j = 0; j < m.n; ++j) {
        const Rational norm = qvec_norm_inf(m.column(j));
        if (norm == 0) throw ZeroColumn("operator has a zero column");
        for (int i = 0; i < m.n; ++i) m.at(i, j) /= norm;
    }
    return OperatorT::from_matrix(std::move(m));
}

}  // namespace bm
