#include "bm/asymmetry.hpp"

#include <algorithm>
#include <set>

#include "bm/errors.hpp"

namespace bm {

namespace {

// Rank of the affine hull of the vertex set.
int affine_rank(const VPolytope& k_v) {
    const int n = k_v.n;
    std::vector<QVector> reduced;
    std::vector<int> pivots;
    for (std::size_t i = 1; i < k_v.vertices.size(); ++i) {
        QVector r = qvec_sub(k_v.vertices[i], k_v.vertices[0]);
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const Rational f = r[pivots[k]];
            if (f != 0) r = qvec_sub(r, qvec_scale(f, reduced[k]));
        }
        for (int c = 0; c < n; ++c) {
            if (r[c] != 0) {
                reduced.push_back(qvec_scale(Rational(1) / r[c], r));
                pivots.push_back(c);
                break;
            }
        }
        if (static_cast<int>(reduced.size()) == n) break;
    }
    return static_cast<int>(reduced.size());
}

void cross_validate(const VPolytope& k_v, const HPolytope& k_h) {
    const int n = k_v.n;
    if (k_h.n != n) throw DimensionMismatch("vertex and halfspace dimensions differ");
    if (k_v.vertices.empty() || k_h.halfspaces.empty()) {
        throw InconsistentRepresentations("empty representation");
    }
    if (affine_rank(k_v) < n) throw DegenerateBody("polytope is not full-dimensional");
    if (!v_in_h(k_v, k_h)) {
        throw InconsistentRepresentations("a vertex violates a halfspace");
    }
    for (const auto& hs : k_h.halfspaces) {
        int tight = 0;
        for (const auto& v : k_v.vertices) {
            if (qvec_dot(hs.normal, v) == hs.offset) ++tight;
        }
        if (tight < n) {
            throw InconsistentRepresentations("halfspace is not a facet of the vertex hull");
        }
    }
    for (const auto& v : k_v.vertices) {
        int tight = 0;
        for (const auto& hs : k_h.halfspaces) {
            if (qvec_dot(hs.normal, v) == hs.offset) ++tight;
        }
        if (tight < n) {
            throw InconsistentRepresentations("listed vertex is not a vertex of the polytope");
        }
    }
}

// Constraint rows of the (w, lambda) LP. The full family over facets i and
// vertices j reduces, given lambda >= 0, to one row per facet with
// m_i = min_j <a_i, v_j>; the last row is lambda >= 0 itself. Tight pairs
// are recovered afterwards by scanning the full family.
std::vector<Halfspace> asymmetry_rows(const VPolytope& k_v, const HPolytope& k_h) {
    const int n = k_v.n;
    std::vector<Halfspace> rows;
    for (const auto& hs : k_h.halfspaces) {
        Rational min_support = qvec_dot(hs.normal, k_v.vertices[0]);
        for (const auto& v : k_v.vertices) {
            const Rational s = qvec_dot(hs.normal, v);
            if (s < min_support) min_support = s;
        }
        QVector row = hs.normal;
        row.push_back(-min_support);
        rows.push_back({std::move(row), hs.offset});
    }
    QVector nonneg(n + 1);
    nonneg[n] = -1;
    rows.push_back({std::move(nonneg), Rational(0)});
    return rows;
}

}  // namespace

AsymmetryResult asymmetry(const VPolytope& k_v, const HPolytope& k_h) {
    cross_validate(k_v, k_h);
    const int n = k_v.n;
    const auto rows = asymmetry_rows(k_v, k_h);
    QVector objective(n + 1);
    objective[n] = 1;
    const LPResult lp = lp_max(objective, rows);
    if (lp.status != LPStatus::optimal || lp.objective <= 0) {
        throw Error("internal: asymmetry LP must have a positive optimum");
    }

    AsymmetryResult result;
    result.lambda = lp.objective;
    result.as_value = Rational(1) / result.lambda;
    QVector w(lp.witness.begin(), lp.witness.begin() + n);
    result.center = qvec_scale(Rational(1) / (Rational(1) + result.lambda), w);

    // Exact re-verification: every reflected-scaled vertex stays inside K.
    for (const auto& v : k_v.vertices) {
        const QVector reflected =
            qvec_sub(result.center,
                     qvec_scale(result.lambda, qvec_sub(v, result.center)));
        for (const auto& hs : k_h.halfspaces) {
            if (qvec_dot(hs.normal, reflected) > hs.offset) {
                throw Error("internal: asymmetry optimum failed re-verification");
            }
        }
    }

    for (std::size_t j = 0; j < k_v.vertices.size(); ++j) {
        for (std::size_t i = 0; i < k_h.halfspaces.size(); ++i) {
            const auto& hs = k_h.halfspaces[i];
            const Rational lhs =
                qvec_dot(hs.normal, w) - result.lambda * qvec_dot(hs.normal, k_v.vertices[j]);
            if (lhs == hs.offset) {
                result.tight_pairs.emplace_back(static_cast<int>(j), static_cast<int>(i));
            }
        }
    }

    // Center uniqueness: with lambda pinned to lambda*, the optimal set in w
    // is a point iff every coordinate has equal min and max.
    result.center_unique = true;
    std::vector<Halfspace> fixed = rows;
    QVector pin(n + 1);
    pin[n] = 1;
    fixed.push_back({pin, result.lambda});             // lambda <= lambda*
    fixed.push_back({qvec_neg(pin), -result.lambda});  // lambda >= lambda*
    for (int c = 0; c < n && result.center_unique; ++c) {
        QVector dir(n + 1);
        dir[c] = 1;
        const LPResult hi = lp_max(dir, fixed);
        const LPResult lo = lp_max(qvec_neg(dir), fixed);
        if (hi.status != LPStatus::optimal || lo.status != LPStatus::optimal ||
            hi.objective != -lo.objective) {
            result.center_unique = false;
        }
    }
    return result;
}

AsymmetryResult asymmetry(const VPolytope& polygon) {
    return asymmetry(polygon, polygon_to_h(polygon));
}

bool asymmetry_feasible(const VPolytope& k_v, const HPolytope& k_h, const Rational& lambda) {
    auto rows = asymmetry_rows(k_v, k_h);
    const int n = k_v.n;
    QVector pin(n + 1);
    pin[n] = -1;
    rows.push_back({std::move(pin), -lambda});  // lambda >= requested value
    QVector objective(n + 1);
    return lp_max(objective, rows).status == LPStatus::optimal;
}

int verify_contact_points(const VPolytope& k_v, const HPolytope& k_h,
                          const AsymmetryResult& result) {
    const QVector& z = result.center;
    const Rational& as = result.as_value;
    // inner body I = K - z, outer body O = -as (K - z); I ⊆ O
    std::vector<QVector> inner_vertices, outer_vertices;
    for (const auto& v : k_v.vertices) {
        inner_vertices.push_back(qvec_sub(v, z));
        outer_vertices.push_back(qvec_scale(-as, qvec_sub(v, z)));
    }
    std::vector<Halfspace> inner_h, outer_h;
    for (const auto& hs : k_h.halfspaces) {
        const Rational shifted = hs.offset - qvec_dot(hs.normal, z);
        inner_h.push_back({hs.normal, shifted});
        outer_h.push_back({qvec_neg(hs.normal), as * shifted});
    }
    auto on_boundary = [](const QVector& x, const std::vector<Halfspace>& hh) {
        bool tight = false;
        for (const auto& hs : hh) {
            const Rational v = qvec_dot(hs.normal, x);
            if (v > hs.offset) return false;
            if (v == hs.offset) tight = true;
        }
        return tight;
    };
    std::set<QVector> contacts;
    for (const auto& v : inner_vertices) {
        if (on_boundary(v, outer_h)) contacts.insert(v);
    }
    for (const auto& u : outer_vertices) {
        if (on_boundary(u, inner_h)) contacts.insert(u);
    }
    return static_cast<int>(contacts.size());
}

VPolytope affine_image(const VPolytope& polygon, const QMatrix& a, const QVector& t) {
    if (polygon.n != 2 || a.n != 2) throw DimensionMismatch("affine_image expects 2D input");
    std::vector<QVector> mapped;
    for (const auto& v : polygon.vertices) mapped.push_back(qvec_add(a.apply(v), t));
    return convex_hull_2d(mapped);
}

bool asymmetry_affine_invariance_check(const VPolytope& k, const QMatrix& a, const QVector& t) {
    if (mat_det(a) == 0) throw InvalidParams("affine map must be invertible");
    const AsymmetryResult before = asymmetry(k);
    const AsymmetryResult after = asymmetry(affine_image(k, a, t));
    return before.as_value == after.as_value &&
           after.center == qvec_add(a.apply(before.center), t);
}

}  // namespace bm
