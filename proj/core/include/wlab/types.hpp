#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

/// Base class for all library errors.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of a formula (bad power base,
/// cotangent at a zero of sine, argument beyond a convergence radius, ...).
class domain_error : public error {
  public:
    using error::error;
};

/// The coefficient set does not admit the requested construction.
class invalid_data_error : public error {
  public:
    using error::error;
};

/// Requested the turning point of a profile that never turns.
class no_turning_point_error : public error {
  public:
    using error::error;
};

/// The adaptive integrator could not meet its tolerances.
class step_failure_error : public error {
  public:
    using error::error;
};

/// Chart construction hit a coordinate degeneracy.
class degenerate_chart_error : public error {
  public:
    using error::error;
};

/// An extrinsic-curvature value came out non-positive where positivity is a
/// standing hypothesis.
class nonpositive_extrinsic_error : public error {
  public:
    using error::error;
};

/// Coefficients of the curvature relation a*Ki + b*Ke = c together with the
/// ambient sign (epsilon = -1 for H^2 x R, +1 for S^2 x R). Single source of
/// truth for every formula in the library.
struct WeingartenData {
    int epsilon = -1;  // ambient curvature sign, in {-1, +1}
    double a = 1.0;    // coefficient of the intrinsic curvature, nonzero
    double b = 1.0;    // coefficient of the extrinsic curvature, positive
    double c = 1.0;    // right-hand side

    /// Basic admissibility: epsilon in {-1,+1}, a nonzero, b positive, all finite.
    bool basic_valid() const;

    /// Throws invalid_data_error unless basic_valid().
    void require_basic() const;

    /// Throws invalid_data_error unless a+b is nonzero (profile/chart formulas
    /// divide by it).
    void require_sum_nonzero() const;

    /// Throws invalid_data_error unless 2a+b is nonzero (quadratic-form and
    /// height-estimate formulas divide by it).
    void require_two_a_plus_b_nonzero() const;
};

enum class SurfaceKind {
    Sphere,                 // closed rotational topological sphere
    Plane,                  // complete noncompact profile, homeomorphic to R^2
    NoOrthogonalRotational, // no profile can cross the axis orthogonally
    ExcludedConstantAngle,  // a+b = 0 forces a constant angle function
    Invalid,                // coefficients violate a standing hypothesis
};

/// Outcome of the coefficient classification, with a human-readable reason
/// naming the sign regime that decided it.
struct Classification {
    SurfaceKind kind = SurfaceKind::Invalid;
    std::string reason;
};

const char* to_string(SurfaceKind kind);

/// Pointwise curvature data of a surface sample together with the residuals
/// of the two structural relations it must satisfy.
struct CurvatureSample {
    double K_i = 0.0;     // intrinsic (Gauss) curvature
    double K_e = 0.0;     // extrinsic curvature, det of the shape operator
    double nu = 0.0;      // angle function, inner product of normal and d/dt
    double kappa1 = 0.0;  // principal curvature along the profile direction
    double kappa2 = 0.0;  // principal curvature along the orbit direction
    double gauss_residual = 0.0;       // |K_i - K_e - eps*nu^2|
    double weingarten_residual = 0.0;  // |a*K_i + b*K_e - c|
};

}  // namespace wlab
