#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct IntegrationResult {
    double value = 0.0;
    double abs_error = 0.0; // estimated bound on |value - true integral|
    long evaluations = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;
    int max_subdivisions = 2000;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on (-1, 1).  All nodes are interior, so the
// integrand is never evaluated at panel endpoints.
inline constexpr double gk_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
};
inline constexpr double gk_weights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
};
inline constexpr double gauss_weights[4] = {
    0.1294849661688697, 0.2797053914892767,
    0.3818300505051189, 0.4179591836734694,
};

struct PanelEstimate {
    double integral;
    double error;
};

// One 15-point Kronrod evaluation on [a, b] with the embedded 7-point
// Gauss estimate used for the error.  Scaling of the raw difference
// follows the usual QUADPACK recipe.
template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - half * gk_nodes[i]);
        fv[14 - i] = f(mid + half * gk_nodes[i]);
    }
    fv[7] = f(mid);

    double resk = gk_weights[7] * fv[7];
    double resabs = std::abs(resk);
    double resg = gauss_weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += gk_weights[i] * (fv[i] + fv[14 - i]);
        resabs += gk_weights[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    for (int i = 0; i < 3; ++i) {
        resg += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    }

    const double mean = 0.5 * resk;
    double resasc = gk_weights[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i) {
        resasc += gk_weights[i] *
                  (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    }

    resk *= half;
    resg *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(resk - resg);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);
    return {resk, err};
}

struct Panel {
    double a, b, integral, error;
    std::int64_t seq; // creation order, breaks ties deterministically
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

template <class F>
IntegrationResult adaptive_finite(F&& f, double a, double b,
                                  const QuadratureOptions& opt) {
    long evals = 0;
    auto counted = [&](double x) {
        ++evals;
        return f(x);
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    std::int64_t seq = 0;
    PanelEstimate first = gk15(counted, a, b);
    heap.push({a, b, first.integral, first.error, seq++});
    double total = first.integral;
    double total_err = first.error;

    const double eps = std::numeric_limits<double>::epsilon();
    int splits = 0;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        // A panel collapsed to rounding width cannot be refined further;
        // its error estimate stands.
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 16.0 * eps * (std::abs(worst.a) + std::abs(worst.b))) {
            break;
        }
        if (++splits > opt.max_subdivisions) {
            throw non_convergence(
                "integrate_adaptive: subdivision budget exhausted");
        }
        heap.pop();
        PanelEstimate left = gk15(counted, worst.a, mid);
        PanelEstimate right = gk15(counted, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.integral, left.error, seq++});
        heap.push({mid, worst.b, right.integral, right.error, seq++});
    }

    // Recompute the totals from the surviving panels; the incremental
    // updates above accumulate rounding.
    double value = 0.0;
    double err = 0.0;
    while (!heap.empty()) {
        value += heap.top().integral;
        err += heap.top().error;
        heap.pop();
    }
    return {value, err, evals};
}

} // namespace detail

// Adaptive quadrature of f over (a, b).  Pass b = +infinity for a
// semi-infinite range; it is mapped onto (0, 1) by x = a + u/(1-u).
// Error contract: |value - integral| <= max(abs_tol, rel_tol*|value|)
// with the usual paired-rule confidence.  The rule is open, so f is
// never called at a or b; endpoint singularities must be integrable.
// Throws non_convergence when max_subdivisions is exhausted first.
// Subdivision order is deterministic: identical inputs give identical
// results bit for bit.
template <class F>
IntegrationResult integrate_adaptive(F&& f, double a, double b,
                                     const QuadratureOptions& opt = {}) {
    if (std::isinf(b)) {
        auto mapped = [&f, a](double u) {
            const double om = 1.0 - u;
            const double x = a + u / om;
            const double fx = f(x);
            if (fx == 0.0) return 0.0; // avoid 0 * huge at u -> 1
            return fx / (om * om);
        };
        return detail::adaptive_finite(mapped, 0.0, 1.0, opt);
    }
    return detail::adaptive_finite(f, a, b, opt);
}

inline IntegrationResult integrate_adaptive(
    const std::function<double(double)>& f, double a, double b,
    const QuadratureOptions& opt) {
    return integrate_adaptive<const std::function<double(double)>&>(f, a, b,
                                                                    opt);
}

} // namespace casimir
