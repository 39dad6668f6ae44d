#pragma once

#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {

struct RootResult {
    double root = 0.0;
    double residual = 0.0; // |f(root)|
    int iterations = 0;
};

// Bisection on [lo, hi].  Requires a sign change; stops when the bracket
// width drops below max(tol, a few ulps of the endpoints).
template <class F>
RootResult find_root_bisect(F&& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (std::signbit(flo) == std::signbit(fhi)) {
        throw no_sign_change("find_root_bisect: f(lo) and f(hi) have the same sign");
    }

    const double eps = std::numeric_limits<double>::epsilon();
    int it = 0;
    double mid = lo, fmid = flo;
    while (hi - lo > std::max(tol, 4.0 * eps * (std::abs(lo) + std::abs(hi)))) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        fmid = f(mid);
        ++it;
        if (fmid == 0.0) return {mid, 0.0, it};
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    // Report the endpoint with the smaller residual.
    double root = std::abs(flo) <= std::abs(fhi) ? lo : hi;
    double res = std::min(std::abs(flo), std::abs(fhi));
    return {root, res, it};
}

} // namespace casimir
