#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "bm/certify.hpp"

namespace bm {

/// 0-symmetric parallelogram conv{±p, ±q}; p, q linearly independent.
struct Parallelogram2D {
    QVector p;
    QVector q;
};

/// Throws Degenerate when p, q are linearly dependent.
Parallelogram2D make_parallelogram(QVector p, QVector q);

/// Vertex counts per closed corner square W_(e1,e2) = {1/3 <= e1 x, e2 y <= 1},
/// plus the number of vertices outside all four squares.
struct CornerCount {
    std::array<int, 4> counts{};  // indexed by corner_index(e1, e2)
    int outside = 0;

    static int corner_index(int e1, int e2) { return (e1 > 0 ? 2 : 0) + (e2 > 0 ? 1 : 0); }
    int count(int e1, int e2) const { return counts[corner_index(e1, e2)]; }
    bool all_ones() const {
        return outside == 0 && counts[0] == 1 && counts[1] == 1 && counts[2] == 1 && counts[3] == 1;
    }
};

/// True iff r C_2 ⊆ conv{±p, ±q} ⊆ C_2, both checked exactly.
bool check_square_sandwich(const Parallelogram2D& par, const Rational& r);

CornerCount corner_classify(const Parallelogram2D& par);

/// Rejection-samples p then q with rational coordinates of bounded
/// denominator in the band |.|_inf ∈ [r, 1] until the sandwich holds.
/// Deterministic given the seed. Throws SamplingExhausted past the cap.
Parallelogram2D sample_valid_parallelogram(std::uint64_t seed, const Rational& r,
                                           long max_attempts = 100000, long denom = 10000);

/// Searches for a parallelogram with r C_2 ⊆ P ⊆ C_2 whose corner
/// classification is not one-per-square. Returns the first hit or nullopt.
std::optional<Parallelogram2D> find_lemma_counterexample(const Rational& r, std::uint64_t seed,
                                                         long max_attempts = 100000,
                                                         long denom = 10000);

struct Claim3dReport {
    bool vertices_in_v = true;       // all six vertices in 1/3 <= |x|,|y|,|z| <= 1
    bool at_most_one_per_cube = true;
    std::array<int, 8> cube_counts{};  // indexed by sign pattern bits (coord > 0)
    int occupied = 0;
};

/// Localization check for a 3D operator that certifies at 5/9; throws
/// PreconditionViolated otherwise. Reports per-cube occupancy.
Claim3dReport claim3d_report(const OperatorT& op);

/// True iff all vertices of T(C_3*) lie in V with at most one per cube.
bool claim3d_check(const OperatorT& op);

}  // namespace bm
