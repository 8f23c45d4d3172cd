#include "bm/linalg.hpp"

#include "bm/errors.hpp"

namespace bm {

namespace {

void require_same_size(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
}

}  // namespace

QVector qvec_add(const QVector& a, const QVector& b) {
    require_same_size(a, b);
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector qvec_sub(const QVector& a, const QVector& b) {
    require_same_size(a, b);
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVector qvec_scale(const Rational& s, const QVector& a) {
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

QVector qvec_neg(const QVector& a) {
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Rational qvec_dot(const QVector& a, const QVector& b) {
    require_same_size(a, b);
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational qvec_norm1(const QVector& a) {
    Rational acc;
    for (const auto& x : a) acc += rat_abs(x);
    return acc;
}

Rational qvec_norm_inf(const QVector& a) {
    Rational best;
    for (const auto& x : a) {
        Rational v = rat_abs(x);
        if (v > best) best = v;
    }
    return best;
}

Rational cross2(const QVector& a, const QVector& b, const QVector& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

QMatrix::QMatrix(int dim, std::initializer_list<Rational> values) : n(dim), entries(values) {
    if (entries.size() != static_cast<std::size_t>(dim) * dim) {
        throw DimensionMismatch("initializer size does not match dimension");
    }
}

QVector QMatrix::row(int i) const {
    QVector out(n);
    for (int j = 0; j < n; ++j) out[j] = at(i, j);
    return out;
}

QVector QMatrix::column(int j) const {
    QVector out(n);
    for (int i = 0; i < n; ++i) out[i] = at(i, j);
    return out;
}

QVector QMatrix::apply(const QVector& x) const {
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("matrix-vector size mismatch");
    QVector out(n);
    for (int i = 0; i < n; ++i) {
        Rational acc;
        for (int j = 0; j < n; ++j) acc += at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

QMatrix QMatrix::identity(int dim) {
    QMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.n != b.n) throw DimensionMismatch("matrix product size mismatch");
    QMatrix out(a.n);
    for (int i = 0; i < a.n; ++i) {
        for (int k = 0; k < a.n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

QMatrix mat_transpose(const QMatrix& m) {
    QMatrix out(m.n);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) out.at(j, i) = m.at(i, j);
    }
    return out;
}

Rational mat_det(const QMatrix& m) {
    QMatrix work = m;
    const int n = m.n;
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        const Rational p = work.at(col, col);
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const Rational f = work.at(r, col) / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
        }
    }
    return det;
}

QMatrix mat_inverse(const QMatrix& m) {
    const int n = m.n;
    QMatrix work = m;
    QMatrix inv = QMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Rational p = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rational f = work.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string mat_encode(const QMatrix& m) {
    std::string out;
    for (const auto& e : m.entries) {
        out += rat_to_string(e);
        out += ';';
    }
    return out;
}

}  // namespace bm
