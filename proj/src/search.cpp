#include "bm/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "bm/errors.hpp"
#include "bm/util.hpp"

namespace bm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// In-place inverse by Gauss-Jordan with partial pivoting; false when the
// pivot magnitude product falls under the guard.
bool float_inverse(const FloatMatrix& m, FloatMatrix& inv, double det_guard) {
    const int n = m.n;
    FloatMatrix work = m;
    inv = FloatMatrix(n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1.0;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
        }
        const double p = work.at(pivot, col);
        det *= p;
        if (p == 0.0) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
            det = -det;
        }
        const double pv = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) /= pv;
            inv.at(col, j) /= pv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = work.at(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return std::abs(det) >= det_guard;
}

double max_inv_norm1(const FloatMatrix& inv) {
    const int n = inv.n;
    double best = 0.0;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        // last sign fixed to +1: v and -v give the same norm
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = inv.at(i, n - 1);
            for (int j = 0; j + 1 < n; ++j) {
                acc += ((mask >> j) & 1 ? 1.0 : -1.0) * inv.at(i, j);
            }
            total += std::abs(acc);
        }
        best = std::max(best, total);
    }
    return best;
}

}  // namespace

FloatMatrix to_float(const QMatrix& m) {
    FloatMatrix out(m.n);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        out.entries[i] = rat_to_double(m.entries[i]);
    }
    return out;
}

double float_ratio(const FloatMatrix& t, double det_guard) {
    double outer = 0.0;
    for (int j = 0; j < t.n; ++j) {
        double col = 0.0;
        for (int i = 0; i < t.n; ++i) col = std::max(col, std::abs(t.at(i, j)));
        outer = std::max(outer, col);
    }
    FloatMatrix inv;
    if (!float_inverse(t, inv, det_guard)) return kInf;
    return outer * max_inv_norm1(inv);
}

namespace {

// Search objective over the n^2 entries: column-normalize, then the ratio
// reduces to max_v |T^-1 v|_1 with the outer radius pinned to 1.
double normalized_objective(const std::vector<double>& entries, int n, double det_guard,
                            FloatMatrix* out = nullptr) {
    FloatMatrix t(n);
    t.entries = entries;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col = std::max(col, std::abs(t.at(i, j)));
        if (col < 1e-12) return kInf;
        for (int i = 0; i < n; ++i) t.at(i, j) /= col;
    }
    FloatMatrix inv;
    if (!float_inverse(t, inv, det_guard)) return kInf;
    if (out) *out = t;
    return max_inv_norm1(inv);
}

struct LocalResult {
    std::vector<double> x;
    double value = kInf;
    int iterations = 0;
};

// Standard Nelder-Mead with adaptive shrink; minimizes f.
template <typename F>
LocalResult nelder_mead(F&& f, std::vector<double> x0, double init_step, int max_iters) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> pts(d + 1, x0);
    std::vector<double> vals(d + 1);
    for (std::size_t i = 1; i <= d; ++i) pts[i][i - 1] += init_step;
    for (std::size_t i = 0; i <= d; ++i) vals[i] = f(pts[i]);

    std::vector<std::size_t> order(d + 1);
    int iters = 0;
    for (; iters < max_iters; ++iters) {
        for (std::size_t i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&vals](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t lo = order.front(), hi = order.back(), next_hi = order[d - 1];
        if (vals[hi] - vals[lo] < 1e-14 && std::isfinite(vals[hi])) break;

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == hi) continue;
            for (std::size_t c = 0; c < d; ++c) centroid[c] += pts[i][c];
        }
        for (auto& c : centroid) c /= static_cast<double>(d);

        auto blend = [&](double coeff) {
            std::vector<double> p(d);
            for (std::size_t c = 0; c < d; ++c) {
                p[c] = centroid[c] + coeff * (pts[hi][c] - centroid[c]);
            }
            return p;
        };
        std::vector<double> reflected = blend(-1.0);
        const double fr = f(reflected);
        if (fr < vals[lo]) {
            std::vector<double> expanded = blend(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[hi] = std::move(expanded);
                vals[hi] = fe;
            } else {
                pts[hi] = std::move(reflected);
                vals[hi] = fr;
            }
        } else if (fr < vals[next_hi]) {
            pts[hi] = std::move(reflected);
            vals[hi] = fr;
        } else {
            std::vector<double> contracted = blend(fr < vals[hi] ? -0.5 : 0.5);
            const double fc = f(contracted);
            if (fc < std::min(vals[hi], fr)) {
                pts[hi] = std::move(contracted);
                vals[hi] = fc;
            } else {
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == lo) continue;
                    for (std::size_t c = 0; c < d; ++c) {
                        pts[i][c] = pts[lo][c] + 0.5 * (pts[i][c] - pts[lo][c]);
                    }
                    vals[i] = f(pts[i]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        if (vals[i] < vals[best]) best = i;
    }
    return {pts[best], vals[best], iters};
}

// Compass polish: coordinate steps with geometric shrink, for the final
// digits Nelder-Mead tends to leave on piecewise-linear objectives.
template <typename F>
void compass_polish(F&& f, std::vector<double>& x, double& value) {
    for (double step = 0.02; step > 1e-11; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t c = 0; c < x.size(); ++c) {
                for (double dir : {step, -step}) {
                    x[c] += dir;
                    const double v = f(x);
                    if (v < value) {
                        value = v;
                        improved = true;
                    } else {
                        x[c] -= dir;
                    }
                }
            }
        }
    }
}

LocalResult run_restart(const SearchConfig& config, std::uint64_t seed) {
    Rng rng(seed);
    const int d = config.n * config.n;
    auto objective = [&config](const std::vector<double>& entries) {
        return normalized_objective(entries, config.n, config.det_guard);
    };
    std::vector<double> x0(d);
    double v0 = kInf;
    do {
        for (auto& e : x0) e = 2.0 * rng.uniform_real() - 1.0;
        v0 = objective(x0);
    } while (!std::isfinite(v0));

    LocalResult best = nelder_mead(objective, x0, 0.25, config.max_iters);
    // re-seeded descent around the found point sharpens nonsmooth minima
    for (double step : {0.05, 0.005}) {
        LocalResult again = nelder_mead(objective, best.x, step, config.max_iters);
        again.iterations += best.iterations;
        if (again.value <= best.value) {
            best = std::move(again);
        }
    }
    compass_polish(objective, best.x, best.value);
    return best;
}

}  // namespace

Rational rationalize(double x, long denom_bound) {
    if (!std::isfinite(x)) throw InvalidParams("cannot rationalize a non-finite value");
    if (denom_bound < 1) throw InvalidParams("denominator bound must be positive");
    const bool negative = x < 0;
    double y = std::abs(x);
    long long h_prev = 1, k_prev = 0;  // convergent h/k bookkeeping
    long long h = static_cast<long long>(std::floor(y)), k = 1;
    double frac = y - std::floor(y);
    for (int depth = 0; depth < 64 && frac > 1e-15; ++depth) {
        y = 1.0 / frac;
        const double fl = std::floor(y);
        if (fl > 9e17) break;
        const long long a = static_cast<long long>(fl);
        frac = y - fl;
        const long long k_next = a * k + k_prev;
        if (k_next > denom_bound || k_next <= 0) break;
        const long long h_next = a * h + h_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    return Rational(BigInt(negative ? -h : h), BigInt(k));
}

QMatrix rationalize_matrix(const FloatMatrix& t, long denom_bound) {
    QMatrix out(t.n);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        out.entries[i] = rationalize(t.entries[i], denom_bound);
    }
    return out;
}

std::optional<QMatrix> snap_to_nice(const FloatMatrix& t) {
    if (t.n != 3) throw InvalidParams("snap_to_nice is defined for n = 3");
    const QMatrix* best = nullptr;
    double best_dist = kInf;
    for (const QMatrix& m : enumerate_nice_octahedra()) {
        double dist = 0.0;
        for (std::size_t i = 0; i < m.entries.size(); ++i) {
            dist = std::max(dist, std::abs(t.entries[i] - rat_to_double(m.entries[i])));
        }
        if (dist < best_dist) {
            best_dist = dist;
            best = &m;
        }
    }
    if (best_dist <= 0.05) return *best;
    return std::nullopt;
}

void SearchConfig::validate() const {
    if (n < 2 || n > 8) throw InvalidParams("search dimension must be in [2, 8]");
    if (restarts < 1 || max_iters < 1 || denom_bound < 1 || jobs < 1) {
        throw InvalidParams("search config values must be positive");
    }
    if (det_guard <= 0 || regression_slack < 0) {
        throw InvalidParams("guards must be positive");
    }
}

std::optional<Rational> theorem_bound_for(int n) {
    switch (n) {
        case 2: return Rational(1);
        case 3: return Rational(9, 5);
        case 4: return Rational(2);
        default: return std::nullopt;
    }
}

SearchReport optimize(const SearchConfig& config) {
    config.validate();
    std::vector<LocalResult> results(config.restarts);
    std::vector<std::uint64_t> seeds(config.restarts);
    for (int i = 0; i < config.restarts; ++i) seeds[i] = derive_seed(config.seed, i);

    if (config.jobs <= 1) {
        for (int i = 0; i < config.restarts; ++i) results[i] = run_restart(config, seeds[i]);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= config.restarts) return;
                results[i] = run_restart(config, seeds[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < config.jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: best value, ties by lexicographic entries.
    int best = 0;
    for (int i = 1; i < config.restarts; ++i) {
        if (results[i].value < results[best].value ||
            (results[i].value == results[best].value && results[i].x < results[best].x)) {
            best = i;
        }
    }

    SearchReport report;
    report.config = config;
    FloatMatrix normalized;
    report.best_float_ratio =
        normalized_objective(results[best].x, config.n, config.det_guard, &normalized);
    report.best_float_matrix = normalized;
    for (int i = 0; i < config.restarts; ++i) {
        report.trace.push_back({i, seeds[i], results[i].value, results[i].iterations});
    }

    report.rationalized = rationalize_matrix(normalized, config.denom_bound);
    const OperatorT op = OperatorT::from_matrix(report.rationalized);
    report.exact_ratio = ratio(op);
    report.theorem_bound = theorem_bound_for(config.n);
    report.conjecture_constant = std::sqrt(config.n / 2.0);

    if (report.theorem_bound && report.exact_ratio < *report.theorem_bound) {
        throw Error("internal: exact ratio beats the theorem bound");
    }
    if (rat_to_double(report.exact_ratio) >
        report.best_float_ratio * (1.0 + config.regression_slack)) {
        throw CertificationRegression("rationalized ratio regressed past the slack: exact " +
                                      rat_to_string(report.exact_ratio));
    }
    if (config.n == 3 && report.exact_ratio == Rational(9, 5) &&
        outer_radius(op) == 1 && !is_nice(op)) {
        throw Error("internal: operator certifies at 5/9 but is not nice");
    }
    return report;
}

}  // namespace bm
