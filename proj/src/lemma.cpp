#include "bm/lemma.hpp"

#include "bm/errors.hpp"
#include "bm/util.hpp"

namespace bm {

namespace {

Rational det2(const QVector& p, const QVector& q) { return p[0] * q[1] - p[1] * q[0]; }

// Membership of a point in conv{±p, ±q} = [p q](C_2*): solve
// [p q] (alpha, beta) = point and test |alpha| + |beta| <= 1.
bool parallelogram_contains(const Parallelogram2D& par, const Rational& x, const Rational& y,
                            const Rational& det) {
    const Rational alpha = (x * par.q[1] - y * par.q[0]) / det;
    const Rational beta = (par.p[0] * y - par.p[1] * x) / det;
    return rat_abs(alpha) + rat_abs(beta) <= 1;
}

}  // namespace

Parallelogram2D make_parallelogram(QVector p, QVector q) {
    if (p.size() != 2 || q.size() != 2) throw DimensionMismatch("parallelogram is planar");
    if (det2(p, q) == 0) throw Degenerate("p and q are linearly dependent");
    return {std::move(p), std::move(q)};
}

bool check_square_sandwich(const Parallelogram2D& par, const Rational& r) {
    if (r <= 0 || r > 1) throw InvalidParams("sandwich scale must lie in (0, 1]");
    if (qvec_norm_inf(par.p) > 1 || qvec_norm_inf(par.q) > 1) return false;  // P ⊆ C_2
    const Rational det = det2(par.p, par.q);
    if (det == 0) return false;
    for (int e1 : {-1, 1}) {
        for (int e2 : {-1, 1}) {
            if (!parallelogram_contains(par, r * e1, r * e2, det)) return false;
        }
    }
    return true;
}

CornerCount corner_classify(const Parallelogram2D& par) {
    CornerCount out;
    const Rational third(1, 3);
    for (const QVector* v : {&par.p, &par.q}) {
        for (int sign : {1, -1}) {
            const Rational x = Rational(sign) * (*v)[0];
            const Rational y = Rational(sign) * (*v)[1];
            const Rational ax = rat_abs(x);
            const Rational ay = rat_abs(y);
            if (ax >= third && ax <= 1 && ay >= third && ay <= 1) {
                ++out.counts[CornerCount::corner_index(x > 0 ? 1 : -1, y > 0 ? 1 : -1)];
            } else {
                ++out.outside;
            }
        }
    }
    return out;
}

namespace {

// One coordinate pair with |.|_inf in [r, 1] and denominators `denom`.
QVector draw_band_point(Rng& rng, const Rational& r, long denom) {
    for (;;) {
        QVector v{rng.uniform_rational(denom, denom), rng.uniform_rational(denom, denom)};
        const Rational norm = qvec_norm_inf(v);
        if (norm >= r && norm <= 1) return v;
    }
}

}  // namespace

Parallelogram2D sample_valid_parallelogram(std::uint64_t seed, const Rational& r,
                                           long max_attempts, long denom) {
    if (r <= 0 || r >= 1) throw InvalidParams("sampling band requires r in (0, 1)");
    Rng rng(seed);
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        QVector p = draw_band_point(rng, r, denom);
        QVector q = draw_band_point(rng, r, denom);
        Parallelogram2D par{std::move(p), std::move(q)};
        if (check_square_sandwich(par, r)) return par;
    }
    throw SamplingExhausted("no valid parallelogram within the attempt cap");
}

std::optional<Parallelogram2D> find_lemma_counterexample(const Rational& r, std::uint64_t seed,
                                                         long max_attempts, long denom) {
    Rng rng(seed);
    // Stratified random search. Violations concentrate near parallelograms
    // with a vertex in the band |y| < 1/3 close to the side x = ±1, so two
    // strata bias draws there; every candidate is still validated by the
    // exact predicates before being returned.
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        Parallelogram2D par{{}, {}};
        switch (attempt % 3) {
            case 0:
                par = {draw_band_point(rng, r, denom), draw_band_point(rng, r, denom)};
                break;
            case 1: {
                // p pinned outside the corner squares, q free in the band
                const Rational x(BigInt(rng.uniform_int(1, denom)), BigInt(denom));
                const Rational y(BigInt(rng.uniform_int(-(denom / 3 - 1), denom / 3 - 1)),
                                 BigInt(denom));
                par = {{rng.next_u64() & 1 ? x : -x, y}, draw_band_point(rng, r, denom)};
                break;
            }
            default: {
                // quarter-turn symmetric candidate (1, u), (-u, 1)
                const Rational u(BigInt(rng.uniform_int(-(denom / 3 - 1), denom / 3 - 1)),
                                 BigInt(denom));
                par = {{Rational(1), u}, {-u, Rational(1)}};
                break;
            }
        }
        if (qvec_norm_inf(par.p) < r || det2(par.p, par.q) == 0) continue;
        if (!check_square_sandwich(par, r)) continue;
        if (!corner_classify(par).all_ones()) return par;
    }
    return std::nullopt;
}

Claim3dReport claim3d_report(const OperatorT& op) {
    if (op.n != 3) throw InvalidParams("claim3d is defined for n = 3");
    if (!std::holds_alternative<SandwichCertificate>(certify_sandwich(op, Rational(5, 9)))) {
        throw PreconditionViolated("operator does not certify at r = 5/9");
    }
    Claim3dReport report;
    const Rational third(1, 3);
    for (int sign : {1, -1}) {
        for (int i = 0; i < 3; ++i) {
            QVector v = op.T.column(i);
            if (sign < 0) v = qvec_neg(v);
            bool in_v = true;
            int cube_bits = 0;
            for (int c = 0; c < 3; ++c) {
                const Rational a = rat_abs(v[c]);
                if (a < third || a > 1) in_v = false;
                if (v[c] > 0) cube_bits |= 1 << c;
            }
            if (!in_v) {
                report.vertices_in_v = false;
                continue;
            }
            if (++report.cube_counts[cube_bits] > 1) report.at_most_one_per_cube = false;
        }
    }
    for (int c = 0; c < 8; ++c) {
        if (report.cube_counts[c] > 0) ++report.occupied;
    }
    return report;
}

bool claim3d_check(const OperatorT& op) {
    const Claim3dReport report = claim3d_report(op);
    return report.vertices_in_v && report.at_most_one_per_cube;
}

}  // namespace bm
