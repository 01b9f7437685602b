#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlab/types.hpp"

namespace wlab {

/// Case split for the comparison constant: the ratio of the two extrema when
/// the maximum is positive, 1 otherwise.
double m_constant_from_extrema(double max_term, double min_term);

/// The comparison constant M of the vertical height estimate: the maximum of
///   1 + (2a+b)(1-nu^2) / (2(c+a nu^2))
/// over nu in [-1,0], divided by the minimum of
///   sqrt( (1/(c+a nu^2)) * ((c+a)/(c+a nu^2))^((a+b)/a) ),
/// both located by a dense grid plus golden-section refinement.
/// Needs epsilon = -1, a+b > 0, c > 0, 2a+b != 0 and c+a > 0.
double m_constant(const WeingartenData& data, int grid_points = 10000);

/// Derivative of the comparison function g on [-1, 0]:
///   g'(t) = M sqrt( (((c+a)/(c+a t^2))^((a+b)/a) - 1) / ((1-t^2)(c+a t^2)) ),
/// with the finite limit M*sqrt(a+b)/(c+a) at t = +-1.
double g_prime(double t, const WeingartenData& data, double m_const);

/// Vertical height bound C0 = integral of g' over [-1, 0], adaptive
/// quadrature at the given relative tolerance.
double vertical_bound_C0(const WeingartenData& data, double rel_tol = 1e-11);

/// Horizontal diameter of the rotational sphere: c1 = 2*k0.
double horizontal_diameter_c1(const WeingartenData& data);

/// Cylinder radius bounding one-ended surfaces: c2 = 2*max(c0, c1) + c0.
double cylinder_radius_c2(double c0, double c1);

struct BoundsCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

/// Computed bound constants for a Sphere-class dataset plus the pass/fail
/// record of the invariants checked against the generated profile. The
/// vertical estimate (M, C0) only applies in H^2 x R with a+b > 0, c > 0;
/// outside that regime the fields are absent and flagged out of scope.
struct BoundsReport {
    WeingartenData data;
    double k0 = 0.0;
    double c1 = 0.0;
    double c0_input = 0.0;
    double c2 = 0.0;
    bool vertical_bound_in_scope = false;
    std::optional<double> M;
    std::optional<double> C0;
    std::optional<double> profile_height;  // h(k0) of the generated sphere
    std::vector<BoundsCheck> checks;

    bool all_pass() const;
};

/// Runs the full bounds pipeline. c0_input <= 0 selects the documented
/// default c0 := c1. Plane-class data propagates no_turning_point_error.
BoundsReport bounds_report(const WeingartenData& data, double c0_input = 0.0);

/// Deterministic JSON rendering of the report (schema 1).
std::string to_json(const BoundsReport& report);

}  // namespace wlab
