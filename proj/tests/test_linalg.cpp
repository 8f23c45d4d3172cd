#include "doctest.h"

#include "bm/errors.hpp"
#include "bm/linalg.hpp"
#include "test_helpers.hpp"

using namespace bm;

TEST_CASE("identity inverts to identity") {
    CHECK(mat_inverse(QMatrix::identity(3)) == QMatrix::identity(3));
}

TEST_CASE("2x2 closed form") {
    QMatrix m(2, {Rational(1), Rational(1), Rational(1), Rational(-1)});
    QMatrix expected(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)});
    CHECK(mat_inverse(m) == expected);
}

TEST_CASE("base 3x3 matrix inverse verified by multiplying back") {
    QMatrix m(3, {Rational(1, 3), Rational(-1), Rational(-1),  //
                  Rational(-1), Rational(1, 3), Rational(-1),  //
                  Rational(-1), Rational(-1), Rational(1, 3)});
    QMatrix inv = mat_inverse(m);
    CHECK(mat_mul(m, inv) == QMatrix::identity(3));
    CHECK(mat_mul(inv, m) == QMatrix::identity(3));
    // closed form (3/4)I - (9/20)J for this matrix
    CHECK(inv.at(0, 0) == Rational(3, 10));
    CHECK(inv.at(0, 1) == Rational(-9, 20));
}

TEST_CASE("singular matrix is rejected") {
    QMatrix m(2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK(mat_det(m) == 0);
    CHECK_THROWS_AS(mat_inverse(m), SingularMatrix);
}

TEST_CASE("M * M^-1 = I for 1000 random invertible matrices, n in {2,3,4}") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + i % 3;
        QMatrix m = testing::random_invertible(rng, n);
        CHECK(mat_mul(m, mat_inverse(m)) == QMatrix::identity(n));
    }
}

TEST_CASE("determinant multiplies and transpose preserves it") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        QMatrix a = testing::random_invertible(rng, 3);
        QMatrix b = testing::random_invertible(rng, 3);
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
        CHECK(mat_det(mat_transpose(a)) == mat_det(a));
    }
}

TEST_CASE("vector helpers") {
    QVector a{Rational(1), Rational(-2), Rational(3)};
    CHECK(qvec_norm1(a) == 6);
    CHECK(qvec_norm_inf(a) == 3);
    CHECK(qvec_dot(a, a) == 14);
    CHECK(cross2({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                 {Rational(0), Rational(1)}) == 1);
}
