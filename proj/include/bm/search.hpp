#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bm/certify.hpp"

namespace bm {

/// Row-major float matrix used only inside the search module.
struct FloatMatrix {
    int n = 0;
    std::vector<double> entries;

    FloatMatrix() = default;
    explicit FloatMatrix(int dim) : n(dim), entries(static_cast<std::size_t>(dim) * dim) {}

    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

FloatMatrix to_float(const QMatrix& m);

/// max_i |T e_i|_inf * max_v |T^-1 v|_1 in floating point; +inf sentinel when
/// |det T| falls under the singularity guard.
double float_ratio(const FloatMatrix& t, double det_guard = 1e-9);

/// Continued-fraction rationalization with a denominator bound: returns the
/// last convergent whose denominator stays within the bound.
Rational rationalize(double x, long denom_bound);

QMatrix rationalize_matrix(const FloatMatrix& t, long denom_bound);

/// Nearest member of the 192-matrix family in entrywise max distance, when
/// that distance is at most 0.05.
std::optional<QMatrix> snap_to_nice(const FloatMatrix& t);

struct SearchConfig {
    int n = 3;
    int restarts = 200;
    int max_iters = 5000;  // Nelder-Mead iterations per local phase
    std::uint64_t seed = 0;
    long denom_bound = 1000000;
    double det_guard = 1e-9;
    double regression_slack = 1e-3;  // relative float-to-exact tolerance
    int jobs = 1;

    void validate() const;
};

struct RestartTrace {
    int restart = 0;
    std::uint64_t seed = 0;
    double best_ratio = 0;
    int iterations = 0;
};

struct SearchReport {
    SearchConfig config;
    double best_float_ratio = 0;
    FloatMatrix best_float_matrix;
    QMatrix rationalized;
    Rational exact_ratio;
    std::vector<RestartTrace> trace;
    std::optional<Rational> theorem_bound;  // 1, 9/5, 2 for n = 2, 3, 4
    double conjecture_constant = 0;         // sqrt(n/2), report-only
};

/// Random-restart derivative-free minimization of the sandwich ratio over
/// column-normalized operators, followed by continued-fraction
/// rationalization and exact certification of the best candidate.
/// Deterministic for a fixed config; restarts may run on config.jobs
/// workers with a deterministic reduction. Exact ratios below the theorem
/// bound are impossible and raise; a rationalized ratio exceeding the float
/// value by more than the slack raises CertificationRegression.
SearchReport optimize(const SearchConfig& config);

std::optional<Rational> theorem_bound_for(int n);

}  // namespace bm
