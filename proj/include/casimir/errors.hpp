#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Response function evaluated at a pole (plasma model at zero frequency).
struct pole_error : error {
    using error::error;
};

// Wave kinematics outside the imaginary-axis sector kappa >= omega/c.
struct invalid_kinematics : error {
    using error::error;
};

// An operation was called outside its documented domain.
struct precondition_error : error {
    using error::error;
};

// An asymptotic formula was requested outside its validity regime.
struct out_of_regime : error {
    using error::error;
};

// A series whose terms fail to decay.
struct series_divergence : error {
    using error::error;
};

// Quadrature or summation budget exhausted before tolerances were met.
struct non_convergence : error {
    using error::error;
};

// Bracketing root finder called without a sign change.
struct no_sign_change : error {
    using error::error;
};

// A dispersion branch has no root at the requested wavevector.
struct root_not_found : error {
    using error::error;
};

// The requested polarization supports no surface mode on these mirrors.
struct no_mode : error {
    using error::error;
};

// CLI configuration file problems.
struct config_error : error {
    using error::error;
};

} // namespace casimir
