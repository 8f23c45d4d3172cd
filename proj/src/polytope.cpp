#include "bm/polytope.hpp"

#include <algorithm>
#include <set>

#include "bm/errors.hpp"

namespace bm {

namespace {

void require_dim_range(int n) {
    if (n < 2 || n > 8) throw InvalidParams("dimension must be in [2, 8]");
}

bool lex_less(const QVector& a, const QVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

std::pair<VPolytope, HPolytope> cube(int n) {
    require_dim_range(n);
    VPolytope v{n, {}};
    for (int mask = 0; mask < (1 << n); ++mask) {
        QVector vert(n);
        for (int i = 0; i < n; ++i) vert[i] = (mask >> i) & 1 ? 1 : -1;
        v.vertices.push_back(std::move(vert));
    }
    HPolytope h{n, {}};
    for (int i = 0; i < n; ++i) {
        for (int sign : {1, -1}) {
            QVector normal(n);
            normal[i] = sign;
            h.halfspaces.push_back({std::move(normal), Rational(1)});
        }
    }
    return {std::move(v), std::move(h)};
}

std::pair<VPolytope, HPolytope> cross_polytope(int n) {
    require_dim_range(n);
    VPolytope v{n, {}};
    for (int sign : {1, -1}) {
        for (int i = 0; i < n; ++i) {
            QVector vert(n);
            vert[i] = sign;
            v.vertices.push_back(std::move(vert));
        }
    }
    HPolytope h{n, {}};
    for (int mask = 0; mask < (1 << n); ++mask) {
        QVector normal(n);
        for (int i = 0; i < n; ++i) normal[i] = (mask >> i) & 1 ? 1 : -1;
        h.halfspaces.push_back({std::move(normal), Rational(1)});
    }
    return {std::move(v), std::move(h)};
}

std::optional<ContainmentViolation> find_violation(const VPolytope& inner, const HPolytope& outer) {
    if (inner.n != outer.n) throw DimensionMismatch("containment test dimensions differ");
    for (std::size_t vi = 0; vi < inner.vertices.size(); ++vi) {
        for (std::size_t hi = 0; hi < outer.halfspaces.size(); ++hi) {
            const auto& hs = outer.halfspaces[hi];
            if (qvec_dot(hs.normal, inner.vertices[vi]) > hs.offset) {
                return ContainmentViolation{static_cast<int>(vi), static_cast<int>(hi)};
            }
        }
    }
    return std::nullopt;
}

bool v_in_h(const VPolytope& inner, const HPolytope& outer) {
    return !find_violation(inner, outer).has_value();
}

HPolytope polygon_to_h(const VPolytope& polygon) {
    if (polygon.n != 2) throw DimensionMismatch("polygon_to_h expects a 2D polytope");
    const auto& v = polygon.vertices;
    const std::size_t m = v.size();
    if (m < 3) throw NotConvex("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < m; ++i) {
        if (cross2(v[i], v[(i + 1) % m], v[(i + 2) % m]) <= 0) {
            throw NotConvex("vertices are not in strictly ccw convex position");
        }
    }
    HPolytope h{2, {}};
    for (std::size_t i = 0; i < m; ++i) {
        const QVector& a = v[i];
        const QVector& b = v[(i + 1) % m];
        // outward normal of a ccw edge
        QVector normal{b[1] - a[1], a[0] - b[0]};
        h.halfspaces.push_back({normal, qvec_dot(normal, a)});
    }
    // All left turns plus global containment rules out self-intersecting input.
    if (!v_in_h(polygon, h)) throw NotConvex("vertex sequence is not a convex polygon");
    return h;
}

VPolytope convex_hull_2d(const std::vector<QVector>& points) {
    for (const auto& p : points) {
        if (p.size() != 2) throw DimensionMismatch("convex_hull_2d expects 2D points");
    }
    std::vector<QVector> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Degenerate("need at least 3 distinct points");

    auto build = [&pts](std::vector<QVector>& chain, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross2(chain[chain.size() - 2], chain[chain.size() - 1], *it) <= 0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
    };
    std::vector<QVector> lower, upper;
    build(lower, pts.begin(), pts.end());
    build(upper, pts.rbegin(), pts.rend());

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw Degenerate("all points are collinear");
    return VPolytope{2, std::move(lower)};
}

VPolytope scale_vpolytope(const Rational& factor, const VPolytope& p) {
    VPolytope out{p.n, {}};
    out.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.vertices.push_back(qvec_scale(factor, v));
    return out;
}

QVector vertex_centroid(const VPolytope& p) {
    if (p.vertices.empty()) throw Degenerate("empty vertex list");
    QVector sum(p.n);
    for (const auto& v : p.vertices) sum = qvec_add(sum, v);
    return qvec_scale(Rational(1, static_cast<long>(p.vertices.size())), sum);
}

bool is_centrally_symmetric(const VPolytope& p) {
    if (p.vertices.size() % 2 != 0) return false;
    const QVector s2 = qvec_scale(Rational(2), vertex_centroid(p));
    std::set<QVector> all(p.vertices.begin(), p.vertices.end());
    for (const auto& v : p.vertices) {
        if (!all.count(qvec_sub(s2, v))) return false;
    }
    return true;
}

}  // namespace bm
