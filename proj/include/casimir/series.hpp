#pragma once

#include <cmath>
#include <cstdint>

#include "casimir/errors.hpp"

namespace casimir {

// Sums term(1) + term(2) + ... for a series whose terms eventually decay
// at least geometrically with the given ratio bound.  Stops once the
// certified tail estimate drops below tol.  The tail is bounded with the
// larger of ratio_bound and the recently observed term ratio, with a
// safety factor for series whose ratio creeps toward one from below
// (power-law decay).  Throws series_divergence when the observed ratio
// stays at or above one, and non_convergence when max_terms is hit.
template <class TermFn>
double sum_tail_bounded(TermFn&& term, double ratio_bound, double tol,
                        std::int64_t max_terms = 10'000'000) {
    if (!(ratio_bound > 0.0 && ratio_bound < 1.0)) {
        throw precondition_error("sum_tail_bounded: ratio_bound must lie in (0,1)");
    }
    double sum = 0.0;
    double prev = 0.0;
    int growing = 0;
    double ratio_seen = ratio_bound;
    for (std::int64_t n = 1; n <= max_terms; ++n) {
        const double t = term(n);
        sum += t;
        if (t == 0.0 && n > 4) return sum;
        if (n > 1 && prev != 0.0) {
            const double r = std::abs(t) / std::abs(prev);
            if (r >= 1.0) {
                if (++growing >= 8) {
                    throw series_divergence(
                        "sum_tail_bounded: term ratio persistently >= 1");
                }
            } else {
                growing = 0;
                ratio_seen = std::max(ratio_bound, r);
            }
        }
        prev = t;
        if (n >= 2 && growing == 0 && ratio_seen < 1.0) {
            const double tail = std::abs(t) * ratio_seen / (1.0 - ratio_seen);
            if (4.0 * tail <= tol) return sum;
        }
    }
    throw non_convergence("sum_tail_bounded: max_terms exhausted");
}

// Polylogarithms Li_3 and Li_4 on [-1, 1] by direct power series.
// The truncation is certified with the smaller of the geometric bound
// |z|^{N+1}/((N+1)^s (1-|z|)) and the power-law bound |z|^{N+1} * N^{1-s}/(s-1),
// so evaluation stays cheap even as z -> 1.
double polylog3(double z);
double polylog4(double z);

} // namespace casimir
