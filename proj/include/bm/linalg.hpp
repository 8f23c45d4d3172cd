#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bm/rational.hpp"

namespace bm {

/// Point or direction with exact rational coordinates.
using QVector = std::vector<Rational>;

QVector qvec_add(const QVector& a, const QVector& b);
QVector qvec_sub(const QVector& a, const QVector& b);
QVector qvec_scale(const Rational& s, const QVector& a);
QVector qvec_neg(const QVector& a);
Rational qvec_dot(const QVector& a, const QVector& b);
Rational qvec_norm1(const QVector& a);
Rational qvec_norm_inf(const QVector& a);

/// 2D cross product of (b - a) and (c - a); sign gives orientation.
Rational cross2(const QVector& a, const QVector& b, const QVector& c);

/// Square rational matrix, row-major.
struct QMatrix {
    int n = 0;
    std::vector<Rational> entries;  // n * n, row-major

    QMatrix() = default;
    explicit QMatrix(int dim) : n(dim), entries(static_cast<std::size_t>(dim) * dim) {}
    QMatrix(int dim, std::initializer_list<Rational> values);

    Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }

    QVector row(int i) const;
    QVector column(int j) const;
    QVector apply(const QVector& x) const;  // M x

    static QMatrix identity(int dim);

    bool operator==(const QMatrix& other) const = default;
};

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_transpose(const QMatrix& m);
Rational mat_det(const QMatrix& m);

/// Exact inverse by Gauss-Jordan elimination with rational pivots.
/// Throws SingularMatrix when det = 0.
QMatrix mat_inverse(const QMatrix& m);

/// Canonical row-major "p/q" encoding, used for exact deduplication and
/// deterministic tie-breaking.
std::string mat_encode(const QMatrix& m);

}  // namespace bm
