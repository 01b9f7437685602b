#pragma once

#include "wlab/types.hpp"

namespace wlab {

/// epsilon-trigonometry: hyperbolic functions for epsilon = -1, circular for
/// epsilon = +1. cot_eps at k = 0 is reported as +infinity; curvature
/// formulas only ever use it in products that stay finite.
struct EpsTrig {
    double cos_eps;
    double sin_eps;
    double cot_eps;
};

/// Evaluates (cos_eps k, sin_eps k, cot_eps k) for k >= 0.
/// Throws domain_error for k < 0, and for epsilon = +1 when k is a nonzero
/// multiple of pi (cotangent undefined there).
EpsTrig trig_eps(double k, int epsilon);

/// tan_eps k = sin_eps k / cos_eps k. Finite at k = 0; for epsilon = +1 the
/// argument must stay below pi/2.
double tan_eps(double k, int epsilon);

/// Full sign-regime classification of (epsilon, a, b, c).
///
/// On top of the sign table for a+b and c, data that would nominally give a
/// profile crossing the axis is rejected as Invalid when the extrinsic
/// curvature at the axis, (c - eps*a)/(a+b), fails to be positive: no
/// orthogonal axis crossing can exist for such coefficients.
Classification classify(const WeingartenData& data);

/// Extrinsic curvature as a function of the angle function,
/// K_e = (c - eps*a*nu^2)/(a+b). Requires a+b != 0.
/// Throws nonpositive_extrinsic_error when the value is <= 0.
double extrinsic_from_nu(double nu, const WeingartenData& data);

/// K_e at an axis crossing (nu^2 = 1): (c - eps*a)/(a+b). No positivity check.
double axis_extrinsic(const WeingartenData& data);

/// |K_i - K_e - eps*nu^2|: residual of the structural relation between the
/// two curvatures and the angle function. Zero on exact data.
double gauss_residual(const CurvatureSample& sample, int epsilon);

/// |a*K_i + b*K_e - c|.
double weingarten_residual(const CurvatureSample& sample, const WeingartenData& data);

}  // namespace wlab
