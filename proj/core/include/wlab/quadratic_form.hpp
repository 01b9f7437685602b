#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wlab/profile.hpp"
#include "wlab/types.hpp"

namespace wlab {

/// The real-analytic coefficient function f of the auxiliary quadratic form,
/// evaluated by a closed form away from zero and by its Taylor series below
/// `switch_radius` (the closed form loses digits to cancellation there).
class AnalyticF {
  public:
    AnalyticF(const WeingartenData& data, int order = 20);

    double operator()(double t) const;  /// f(t) for t in [0, 1]
    double prime(double t) const;       /// f'(t)

    // both branches exposed so tests can pit them against each other
    double eval_closed(double t) const;
    double eval_series(double t) const;  /// throws domain_error beyond the radius
    double prime_closed(double t) const;
    double prime_series(double t) const;

    double switch_radius() const { return switch_radius_; }
    double convergence_radius() const { return radius_; }
    const std::vector<double>& series_coeffs() const { return coeffs_; }

  private:
    WeingartenData data_;
    std::vector<double> coeffs_;
    double radius_;
    double switch_radius_;
};

/// One row of the chart in which the second fundamental form is conformal:
/// z = u~ + i v, II = 2*rho*|dz|^2. On a rotational surface every stored
/// field is real and constant along v.
struct ChartNode {
    double u;    // arclength of the source profile point
    double k;    // profile radius
    double E;    // dz^2-coefficient of the first fundamental form
    double F;    // |dz|^2-coefficient of I is 2F
    double rho;  // II = 2*rho*|dz|^2, positive
    double D;    // F^2 - |E|^2, positive
    double h_z;  // z-derivative of the height function
    double h;    // height
    double nu;   // angle function
    double f_t;  // f(1 - nu^2)
    double fp_t; // f'(1 - nu^2)
    double Q;    // E + f(1-nu^2) * h_z^2 (with f replaced by 0 under ablation)
};

/// Conformal-for-II chart along a profile, pole collars excluded. Nodes are
/// uniformly spaced in the conformal coordinate u~; the grid is logically
/// n_u x n_v but rotational symmetry makes all fields v-independent, so one
/// row per u~ value is stored.
struct ConformalChart {
    WeingartenData data;
    std::size_t n_u = 0;
    std::size_t n_v = 0;
    double step = 0.0;  // u~ spacing
    double dv = 0.0;    // v spacing, 2*pi/n_v
    bool ablated = false;
    std::vector<ChartNode> rows;

    const ChartNode& node(std::size_t i, std::size_t /*j*/) const { return rows[i]; }
};

/// Builds the chart by reparametrizing the profile with
/// d(u~) = sqrt(kappa1 E / (kappa2 G)) du, which makes II = kappa2*G*|dz|^2.
/// `step` is the u~ resolution; `ablate_f` zeroes f inside Q only (test hook).
/// Throws degenerate_chart_error if the second fundamental form degenerates.
ConformalChart conformal_chart(const ProfileCurve& profile, const WeingartenData& data,
                               int n_v, double step = 0.001, bool ablate_f = false);

/// sup |Q| / sup |E| over the chart (scale-free).
double q_sup_norm(const ConformalChart& chart);

/// Central-difference verification of the chart identities.
struct IdentityReport {
    double nu_identity_residual = 0.0;  // max |FD nu_zbar + alpha*K_e/rho|
    double h_identity_residual = 0.0;   // max |FD h_zzbar - closed-form rhs|
    double bound_violation = 0.0;       // max over nodes of (|FD Q_zbar| - bound), clamped at 0
    std::size_t grid_resolution = 0;
};
IdentityReport identity_checks(const ConformalChart& chart, const WeingartenData& data);

/// max over profile samples (pole collars excluded) of
/// |kappa1/kappa2 - (1 + t f(t))| with t = 1 - nu^2; the scalar form of the
/// statement that Q vanishes on rotational surfaces.
double principal_ratio_identity(const ProfileCurve& profile, const WeingartenData& data,
                                bool ablate_f = false);

/// The residual report emitted by the verify pipeline.
struct ResidualReport {
    double q_sup_norm = 0.0;
    double nu_identity_residual = 0.0;
    double h_identity_residual = 0.0;
    double ratio_identity_residual = 0.0;
    std::size_t grid_resolution = 0;
};
ResidualReport compute_residual_report(const ProfileCurve& profile, const WeingartenData& data,
                                       int n_v, double step = 0.001, bool ablate_f = false);

}  // namespace wlab
