#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wlab/types.hpp"

namespace wlab {

/// Tolerances and truncation knobs for the profile integrator.
struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.01;      // also the sample spacing of the stored curve
    double k_max = 3.0;          // truncation radius for noncompact profiles
    double singular_margin = 0;  // collar width below k0; <= 0 selects 1e-3 * k0

    void validate() const;
};

/// One arclength sample of the generating curve: radial coordinate k, height
/// h, their u-derivatives, and the second derivative of k.
struct ProfileSample {
    double u;
    double k;
    double h;
    double kp;
    double hp;
    double kpp;
};

/// Generating curve of a rotational surface, sampled by arclength. For
/// Sphere-class data the curve starts and ends on the axis and `closed` is
/// set; for Plane-class data it is truncated at k = k_max.
struct ProfileCurve {
    std::vector<ProfileSample> samples;
    std::optional<double> k0;  // turning-point radius, spheres only
    Classification classification;
    bool closed = false;
    WeingartenData data;

    // closure bookkeeping (valid when closed)
    std::size_t equator_index = 0;
    double u_equator = 0.0;
    double h_equator = 0.0;

    /// Height of the last sample (total height 2*h(k0) for closed curves).
    double height() const { return samples.empty() ? 0.0 : samples.back().h; }
};

/// Right-hand side of the first integral: the squared radial speed
///   (k')^2 = eps*c/a + ((a - eps*c)/a) * (cos_eps k)^(-2a/(a+b)).
/// Throws domain_error when the power base is non-positive (epsilon = +1
/// with k >= pi/2).
double first_integral(double k, const WeingartenData& data);

/// d/dk of the first integral; used for Newton steps and consistency tests.
double first_integral_derivative(double k, const WeingartenData& data);

/// The unique positive root k0 of the first integral, where the profile has
/// a vertical tangent. Only Sphere-class data has one; Plane-class data
/// throws no_turning_point_error, anything else invalid_data_error.
double turning_point_k0(const WeingartenData& data);

/// Radial acceleration from the second-order profile equation,
///   k'' = (eps*a*(k')^2 - c) * tan_eps(k) / (a+b).
/// The product form is regular at the axis (k'' -> 0 as k -> 0).
double second_derivative_k(double k, double kp, const WeingartenData& data);

/// Integrates the generating curve.
///
/// The curve leaves the axis orthogonally (k(0)=0, k'(0)=1, series start).
/// Sphere-class data: adaptive integration of the second-order system up to
/// a collar below k0, then the graph parametrization h(k) with the
/// substitution s = sqrt(k0 - k) across the collar (the substitution removes
/// the inverse-square-root singularity; fixed-order Gauss quadrature), then
/// reflection about the slice h(k0) closes the curve. Plane-class data:
/// integration until k = k_max.
ProfileCurve integrate_profile(const WeingartenData& data, const IntegratorConfig& config = {});

/// Left/right second-derivative estimates of k(u) at the reflection slice,
/// from one-sided fits of k' over the nearest samples.
struct ClosureReport {
    double kpp_left;     // fitted k'' approaching the equator from below
    double kpp_right;    // fitted k'' leaving the equator
    double kpp_jump;     // |left - right|
    double kpp_analytic; // -c * tan_eps(k0) / (a+b)
};

/// Measures how smoothly the two halves of a closed profile meet at the
/// turning point. Throws invalid_data_error for open curves.
ClosureReport closure_report(const ProfileCurve& profile);

/// CSV emitter: header u,k,h,kp,hp,kpp and one row per sample at 17
/// significant digits.
void write_profile_csv(const ProfileCurve& profile, std::ostream& out);

}  // namespace wlab
