#include "casimir/series.hpp"

#include <cmath>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double zeta3 = 1.2020569031595942854;
constexpr double zeta2 = pi * pi / 6.0;
constexpr double zeta4 = pi * pi * pi * pi / 90.0;

// Direct power series sum_{n>=1} z^n / n^s for 0 < z <= 0.8; the
// geometric tail bound certifies the truncation.
template <int S>
double direct_series(double z) {
    double sum = 0.0;
    double zn = 1.0;
    for (int n = 1; n < 1000; ++n) {
        zn *= z;
        const double dn = static_cast<double>(n);
        double p = dn * dn * dn;
        if constexpr (S == 4) p *= dn;
        sum += zn / p;
        const double bound = zn * z / (std::pow(dn + 1.0, S) * (1.0 - z));
        if (bound <= 1e-17) return sum;
    }
    throw non_convergence("polylog: direct series budget exhausted");
}

// Expansion about z = 1 in mu = ln z (classical log series), used for
// 0.8 < z <= 1 where the power series converges too slowly.  The
// truncated terms fall off by (mu/2pi)^2 < 1.3e-3 per order, so the
// k <= 13 truncation is far below double precision.
double log_expansion_li4(double z) {
    const double mu = std::log(z);
    const double h3 = 11.0 / 6.0; // 1 + 1/2 + 1/3
    double sum = zeta4 + zeta3 * mu + zeta2 * mu * mu / 2.0;
    sum += mu * mu * mu / 6.0 * (h3 - std::log(-mu));
    // zeta(4 - k) for k = 4, 5, 7, 9, 11, 13 (even negative zeros skipped)
    const double mu2 = mu * mu;
    double muk = mu2 * mu2;           // mu^4
    sum += -0.5 / 24.0 * muk;         // zeta(0)/4!
    muk *= mu;                        // mu^5
    sum += -(1.0 / 12.0) / 120.0 * muk;
    muk *= mu2;                       // mu^7
    sum += (1.0 / 120.0) / 5040.0 * muk;
    muk *= mu2;                       // mu^9
    sum += -(1.0 / 252.0) / 362880.0 * muk;
    muk *= mu2;                       // mu^11
    sum += (1.0 / 240.0) / 39916800.0 * muk;
    muk *= mu2;                       // mu^13
    sum += -(1.0 / 132.0) / 6227020800.0 * muk;
    return sum;
}

double log_expansion_li3(double z) {
    const double mu = std::log(z);
    const double h2 = 1.5; // 1 + 1/2
    double sum = zeta3 + zeta2 * mu;
    sum += mu * mu / 2.0 * (h2 - std::log(-mu));
    const double mu2 = mu * mu;
    double muk = mu2 * mu;            // mu^3
    sum += -0.5 / 6.0 * muk;          // zeta(0)/3!
    muk *= mu;                        // mu^4
    sum += -(1.0 / 12.0) / 24.0 * muk;
    muk *= mu2;                       // mu^6
    sum += (1.0 / 120.0) / 720.0 * muk;
    muk *= mu2;                       // mu^8
    sum += -(1.0 / 252.0) / 40320.0 * muk;
    muk *= mu2;                       // mu^10
    sum += (1.0 / 240.0) / 3628800.0 * muk;
    muk *= mu2;                       // mu^12
    sum += -(1.0 / 132.0) / 479001600.0 * muk;
    return sum;
}

template <int S>
double polylog_positive(double z) {
    if (z == 1.0) return S == 3 ? zeta3 : zeta4;
    if (z > 0.8) return S == 3 ? log_expansion_li3(z) : log_expansion_li4(z);
    return direct_series<S>(z);
}

// Negative arguments through Li_s(z) + Li_s(-z) = 2^{1-s} Li_s(z^2).
template <int S>
double polylog_impl(double z) {
    if (!(z >= -1.0 && z <= 1.0)) {
        throw precondition_error("polylog: argument must lie in [-1, 1]");
    }
    if (z == 0.0) return 0.0;
    if (z > 0.0) return polylog_positive<S>(z);
    const double az = -z;
    const double two_pow = S == 3 ? 0.25 : 0.125; // 2^{1-s}
    return two_pow * polylog_positive<S>(az * az) - polylog_positive<S>(az);
}

} // namespace

double polylog3(double z) { return polylog_impl<3>(z); }
double polylog4(double z) { return polylog_impl<4>(z); }

} // namespace casimir
