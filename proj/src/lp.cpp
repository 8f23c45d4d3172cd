#include "bm/lp.hpp"

#include <cstddef>

#include "bm/errors.hpp"

namespace bm {

namespace {

// Dense exact simplex tableau in equality form A y = b, y >= 0, rhs >= 0.
struct Tableau {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> a;  // rows x (cols + 1), last column is rhs
    std::vector<Rational> obj;             // reduced-cost row, size cols + 1 (last: -value)
    std::vector<int> basis;                // basic variable per row
    std::vector<bool> enterable;           // artificials get locked out in phase 2

    void pivot(int prow, int pcol) {
        auto& prow_ref = a[prow];
        const Rational p = prow_ref[pcol];
        for (auto& x : prow_ref) x /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            const Rational f = a[r][pcol];
            if (f == 0) continue;
            for (int c = 0; c <= cols; ++c) a[r][c] -= f * prow_ref[c];
        }
        const Rational fo = obj[pcol];
        if (fo != 0) {
            for (int c = 0; c <= cols; ++c) obj[c] -= fo * prow_ref[c];
        }
        basis[prow] = pcol;
    }

    // Maximizes the current objective row. Returns false on unboundedness.
    bool run_simplex() {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < cols; ++c) {  // Bland: smallest improving index
                if (enterable[c] && obj[c] > 0) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r < rows; ++r) {
                if (a[r][enter] <= 0) continue;
                Rational ratio = a[r][cols] / a[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

// Rank and (when rank deficient) a nullspace vector of a set of row vectors.
struct RowSpace {
    std::vector<QVector> reduced;  // echelon rows
    std::vector<int> pivot_cols;

    void add(const QVector& row) {
        QVector r = row;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const Rational f = r[pivot_cols[k]];
            if (f != 0) r = qvec_sub(r, qvec_scale(f, reduced[k]));
        }
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (r[c] != 0) {
                reduced.push_back(qvec_scale(Rational(1) / r[c], r));
                pivot_cols.push_back(static_cast<int>(c));
                return;
            }
        }
    }

    int rank() const { return static_cast<int>(reduced.size()); }

    // A nonzero vector orthogonal to all added rows; requires rank < dim.
    QVector nullspace_vector(int dim) const {
        std::vector<bool> is_pivot(dim, false);
        for (int c : pivot_cols) is_pivot[c] = true;
        int free_col = -1;
        for (int c = 0; c < dim; ++c) {
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
        }
        QVector v(dim);
        v[free_col] = 1;
        // back-substitute pivots against the free column
        for (int k = rank() - 1; k >= 0; --k) {
            Rational acc;
            for (int c = 0; c < dim; ++c) {
                if (c != pivot_cols[k]) acc += reduced[k][c] * v[c];
            }
            v[pivot_cols[k]] = -acc;
        }
        return v;
    }
};

std::vector<int> tight_indices(const QVector& x, const std::vector<Halfspace>& constraints) {
    std::vector<int> out;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (qvec_dot(constraints[i].normal, x) == constraints[i].offset) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

// Walks the witness to a vertex of the optimal face without changing the
// objective value. Stops early when the face is unbounded.
void purify_to_vertex(QVector& x, const QVector& objective,
                      const std::vector<Halfspace>& constraints) {
    const int d = static_cast<int>(x.size());
    for (int round = 0; round < d + 1; ++round) {
        RowSpace span;
        for (int i : tight_indices(x, constraints)) span.add(constraints[i].normal);
        if (span.rank() >= d) return;
        QVector dir = span.nullspace_vector(d);
        if (qvec_dot(objective, dir) != 0) {
            // cannot happen at an optimum of a feasible LP; fail loudly
            throw Error("internal: purification direction changes the objective");
        }
        bool moved = false;
        for (const QVector& cand : {dir, qvec_neg(dir)}) {
            bool blocked = false;
            Rational step;
            for (const auto& hs : constraints) {
                const Rational adv = qvec_dot(hs.normal, cand);
                if (adv <= 0) continue;
                const Rational room = (hs.offset - qvec_dot(hs.normal, x)) / adv;
                if (!blocked || room < step) {
                    blocked = true;
                    step = room;
                }
            }
            if (blocked) {
                x = qvec_add(x, qvec_scale(step, cand));
                moved = true;
                break;
            }
        }
        if (!moved) return;  // optimal face unbounded in both directions
    }
}

}  // namespace

LPResult lp_max(const QVector& objective, const std::vector<Halfspace>& constraints) {
    const int d = static_cast<int>(objective.size());
    const int m = static_cast<int>(constraints.size());
    for (const auto& hs : constraints) {
        if (static_cast<int>(hs.normal.size()) != d) {
            throw DimensionMismatch("constraint dimension differs from objective");
        }
    }
    if (m == 0) {
        for (const auto& c : objective) {
            if (c != 0) return {LPStatus::unbounded, Rational(0), QVector(d), {}};
        }
        return {LPStatus::optimal, Rational(0), QVector(d), {}};
    }

    // Variables: u_0..u_{d-1}, v_0..v_{d-1} (x = u - v), then m slacks,
    // then artificials for rows whose rhs had to be negated.
    Tableau t;
    t.rows = m;
    const int slack0 = 2 * d;
    int cols = 2 * d + m;
    std::vector<int> art_of_row(m, -1);
    for (int i = 0; i < m; ++i) {
        if (constraints[i].offset < 0) art_of_row[i] = cols++;
    }
    t.cols = cols;
    t.a.assign(m, std::vector<Rational>(cols + 1));
    t.basis.assign(m, -1);
    t.enterable.assign(cols, true);

    for (int i = 0; i < m; ++i) {
        const bool flip = constraints[i].offset < 0;
        const Rational sgn = flip ? -1 : 1;
        for (int j = 0; j < d; ++j) {
            t.a[i][j] = sgn * constraints[i].normal[j];
            t.a[i][d + j] = -sgn * constraints[i].normal[j];
        }
        t.a[i][slack0 + i] = sgn;
        t.a[i][cols] = sgn * constraints[i].offset;
        if (flip) {
            t.a[i][art_of_row[i]] = 1;
            t.basis[i] = art_of_row[i];
        } else {
            t.basis[i] = slack0 + i;
        }
    }

    // Phase 1: maximize -(sum of artificials).
    bool have_artificials = false;
    t.obj.assign(cols + 1, Rational(0));
    for (int i = 0; i < m; ++i) {
        if (art_of_row[i] >= 0) {
            have_artificials = true;
            t.obj[art_of_row[i]] = -1;
        }
    }
    if (have_artificials) {
        for (int i = 0; i < m; ++i) {
            if (art_of_row[i] >= 0) {
                // canonicalize: add row to objective so basic columns read zero
                for (int c = 0; c <= cols; ++c) t.obj[c] += t.a[i][c];
            }
        }
        if (!t.run_simplex()) throw Error("internal: phase-1 simplex unbounded");
        if (t.obj[cols] != 0) return {LPStatus::infeasible, Rational(0), QVector(d), {}};
    }

    // Lock artificials out and install the real objective.
    for (int i = 0; i < m; ++i) {
        if (art_of_row[i] >= 0) t.enterable[art_of_row[i]] = false;
    }
    for (int r = 0; r < m; ++r) {
        if (t.basis[r] >= 2 * d + m) {
            // Basic artificial at value 0: pivot any usable column in.
            int col = -1;
            for (int c = 0; c < 2 * d + m; ++c) {
                if (t.a[r][c] != 0) {
                    col = c;
                    break;
                }
            }
            if (col >= 0) t.pivot(r, col);
            // else the row is redundant (all zeros); harmless to keep
        }
    }
    t.obj.assign(cols + 1, Rational(0));
    for (int j = 0; j < d; ++j) {
        t.obj[j] = objective[j];
        t.obj[d + j] = -objective[j];
    }
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[r];
        const Rational f = t.obj[b];
        if (f != 0) {
            for (int c = 0; c <= cols; ++c) t.obj[c] -= f * t.a[r][c];
        }
    }
    if (!t.run_simplex()) return {LPStatus::unbounded, Rational(0), QVector(d), {}};

    QVector x(d);
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[r];
        if (b < d) {
            x[b] += t.a[r][cols];
        } else if (b < 2 * d) {
            x[b - d] -= t.a[r][cols];
        }
    }
    const Rational value = qvec_dot(objective, x);
    purify_to_vertex(x, objective, constraints);
    if (qvec_dot(objective, x) != value) throw Error("internal: purification changed optimum");
    return {LPStatus::optimal, value, x, tight_indices(x, constraints)};
}

}  // namespace bm
