#pragma once

#include <vector>

#include "bm/polytope.hpp"

namespace bm {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational objective;
    QVector witness;
    std::vector<int> tight;  // constraint indices exactly tight at the witness
};

/// Exact maximization of <objective, x> over free x subject to
/// <a_i, x> <= b_i. Two-phase simplex with Bland's rule (guaranteed
/// termination); on optimal the witness is moved to a vertex of the optimal
/// face when one exists, so it is tight on a basis of constraints for
/// bounded full-dimensional regions.
LPResult lp_max(const QVector& objective, const std::vector<Halfspace>& constraints);

}  // namespace bm
