#include "wlab/profile.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>

#include "wlab/geometry.hpp"
#include "wlab/numerics.hpp"

namespace wlab {

namespace {

constexpr double kAxisDelta = 1e-6;  // series start offset from the pole
constexpr int kCollarSamples = 8;    // stored samples across the collar
constexpr long kMaxSteps = 2'000'000;

using Vec3 = std::array<double, 3>;  // state (k, kp, h), arclength parameter

Vec3 axpy(const Vec3& y, double s, const Vec3& dy) {
    return {y[0] + s * dy[0], y[1] + s * dy[1], y[2] + s * dy[2]};
}

// derivative of (k, kp, h) with respect to arclength
Vec3 rhs_u(const Vec3& y, const WeingartenData& d) {
    const double hp = std::sqrt(std::max(0.0, 1.0 - y[1] * y[1]));
    return {y[1], second_derivative_k(y[0], y[1], d), hp};
}

Vec3 rk4_u(const Vec3& y, double h, const WeingartenData& d) {
    const Vec3 d1 = rhs_u(y, d);
    const Vec3 d2 = rhs_u(axpy(y, 0.5 * h, d1), d);
    const Vec3 d3 = rhs_u(axpy(y, 0.5 * h, d2), d);
    const Vec3 d4 = rhs_u(axpy(y, h, d3), d);
    Vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = y[i] + h / 6.0 * (d1[i] + 2.0 * d2[i] + 2.0 * d3[i] + d4[i]);
    return out;
}

// graph parametrization for landing exactly on a target radius:
// state (u, kp, h) as functions of k, valid while kp > 0
Vec3 rhs_k(double k, const Vec3& z, const WeingartenData& d) {
    const double kp = z[1];
    const double hp = std::sqrt(std::max(0.0, 1.0 - kp * kp));
    return {1.0 / kp, second_derivative_k(k, kp, d) / kp, hp / kp};
}

Vec3 rk4_k(double k, const Vec3& z, double h, const WeingartenData& d) {
    const Vec3 d1 = rhs_k(k, z, d);
    const Vec3 d2 = rhs_k(k + 0.5 * h, axpy(z, 0.5 * h, d1), d);
    const Vec3 d3 = rhs_k(k + 0.5 * h, axpy(z, 0.5 * h, d2), d);
    const Vec3 d4 = rhs_k(k + h, axpy(z, h, d3), d);
    Vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = z[i] + h / 6.0 * (d1[i] + 2.0 * d2[i] + 2.0 * d3[i] + d4[i]);
    return out;
}

ProfileSample make_sample(double u, const Vec3& y, const WeingartenData& d) {
    const double hp = std::sqrt(std::max(0.0, 1.0 - y[1] * y[1]));
    return {u, y[0], y[2], y[1], hp, second_derivative_k(y[0], y[1], d)};
}

// Adaptive step-doubling RK4 driver. Integrates from (u, y) until k reaches
// k_target, storing a sample at every accepted step, then lands exactly on
// k_target via the graph parametrization. Returns the landed state.
Vec3 integrate_until(double& u, Vec3 y, double k_target, const WeingartenData& d,
                     const IntegratorConfig& cfg, std::vector<ProfileSample>& out) {
    double h = cfg.max_step;
    long steps = 0;
    // kpp < 0 on the whole domain, so k(u + h) <= k + h*kp and no stage can
    // evaluate beyond k + h*kp; the landing trigger below also guarantees the
    // stepper never looks past k_target.
    while (y[0] + h * y[1] < k_target) {
        if (++steps > kMaxSteps) throw step_failure_error("profile integration step budget exhausted");
        const Vec3 full = rk4_u(y, h, d);
        Vec3 half = rk4_u(y, 0.5 * h, d);
        half = rk4_u(half, 0.5 * h, d);

        const Vec3 dy = rhs_u(y, d);
        double err = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double scale = cfg.abs_tol + cfg.rel_tol * (std::abs(y[i]) + std::abs(h * dy[i]));
            err = std::max(err, std::abs(half[i] - full[i]) / scale);
        }
        if (err <= 1.0) {
            for (int i = 0; i < 3; ++i) y[i] = half[i] + (half[i] - full[i]) / 15.0;
            u += h;
            out.push_back(make_sample(u, y, d));
            const double grow = (err > 1e-4) ? 0.9 * std::pow(err, -0.2) : 4.0;
            h = std::min(cfg.max_step, h * std::min(4.0, grow));
        } else {
            h *= std::max(0.1, 0.9 * std::pow(err, -0.25));
        }
        if (h < 1e-14) throw step_failure_error("profile integration step size underflow");
    }

    // land on k_target with fixed substeps in the k variable
    const double gap = k_target - y[0];
    if (gap > 0.0) {
        Vec3 z = {u, y[1], y[2]};
        const int n = 32;
        const double hk = gap / n;
        double k = y[0];
        for (int i = 0; i < n; ++i) {
            z = rk4_k(k, z, hk, d);
            k += hk;
        }
        u = z[0];
        y = {k_target, z[1], z[2]};
        out.push_back(make_sample(u, y, d));
    }
    return y;
}

// first integral evaluated at k = k0 - s^2 with the value at k0 subtracted
// exactly, so the collar quadrature sees no cancellation
double collar_first_integral(double s, double k0, const WeingartenData& d) {
    const double q = -2.0 * d.a / (d.a + d.b);
    const double c1 = 1.0 - d.epsilon * d.c / d.a;
    const double half = 0.5 * s * s;
    double diff, cos_k0;
    if (d.epsilon == -1) {
        diff = -2.0 * std::sinh(k0 - half) * std::sinh(half);
        cos_k0 = std::cosh(k0);
    } else {
        diff = 2.0 * std::sin(k0 - half) * std::sin(half);
        cos_k0 = std::cos(k0);
    }
    return c1 * std::pow(cos_k0, q) * std::expm1(q * std::log1p(diff / cos_k0));
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(max_step > 0.0) || !(k_max > 0.0))
        throw invalid_data_error("integrator tolerances and steps must be positive");
}

double first_integral(double k, const WeingartenData& data) {
    data.require_sum_nonzero();
    if (!(k >= 0.0)) throw domain_error("first_integral: k must be >= 0");
    const double cos_e = (data.epsilon == -1) ? std::cosh(k) : std::cos(k);
    if (!(cos_e > 0.0))
        throw domain_error("first_integral: power base non-positive (needs k < pi/2 on the sphere)");
    const double ec_a = data.epsilon * data.c / data.a;
    const double q = -2.0 * data.a / (data.a + data.b);
    return ec_a + (1.0 - ec_a) * std::pow(cos_e, q);
}

double first_integral_derivative(double k, const WeingartenData& data) {
    const double f = first_integral(k, data);
    const double ec_a = data.epsilon * data.c / data.a;
    return 2.0 * data.epsilon * data.a / (data.a + data.b) * (f - ec_a) *
           tan_eps(k, data.epsilon);
}

double turning_point_k0(const WeingartenData& data) {
    const Classification cls = classify(data);
    if (cls.kind == SurfaceKind::Plane)
        throw no_turning_point_error("first integral stays positive; no turning point");
    if (cls.kind != SurfaceKind::Sphere)
        throw invalid_data_error("turning point needs Sphere-class data: " + cls.reason);

    // expand the bracket until the first integral changes sign; for the
    // spherical ambient the root always lies strictly below pi/2
    double lo = 0.0, hi = 0.5;
    for (int i = 0;; ++i) {
        if (i > 200) throw no_turning_point_error("bracket expansion failed");
        if (first_integral(hi, data) <= 0.0) break;
        lo = hi;
        hi = (data.epsilon == 1) ? 0.5 * (hi + M_PI / 2.0) : 2.0 * hi;
    }
    auto f = [&](double k) { return first_integral(k, data); };
    auto fp = [&](double k) { return first_integral_derivative(k, data); };
    return find_root(f, fp, lo, hi, 1e-15);
}

double second_derivative_k(double k, double kp, const WeingartenData& data) {
    return (data.epsilon * data.a * kp * kp - data.c) * tan_eps(k, data.epsilon) /
           (data.a + data.b);
}

ProfileCurve integrate_profile(const WeingartenData& data, const IntegratorConfig& config) {
    config.validate();
    ProfileCurve curve;
    curve.data = data;
    curve.classification = classify(data);
    if (curve.classification.kind != SurfaceKind::Sphere &&
        curve.classification.kind != SurfaceKind::Plane)
        throw invalid_data_error("profile needs Sphere- or Plane-class data: " +
                                 curve.classification.reason);

    const double ke_axis = axis_extrinsic(data);  // positive by classification
    const double delta = kAxisDelta;

    // exact pole, then series data just off the axis:
    //   k = u - ke*u^3/6, k' = 1 - ke*u^2/2, h = sqrt(ke)*u^2/2
    curve.samples.push_back({0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
    Vec3 y = {delta - ke_axis * delta * delta * delta / 6.0,
              1.0 - ke_axis * delta * delta / 2.0,
              std::sqrt(ke_axis) * delta * delta / 2.0};
    double u = delta;
    curve.samples.push_back(make_sample(u, y, data));

    if (curve.classification.kind == SurfaceKind::Plane) {
        double k_stop = config.k_max;
        if (data.epsilon == 1) k_stop = std::min(k_stop, M_PI / 2.0 - 1e-3);
        if (k_stop <= 2.0 * delta) throw invalid_data_error("k_max too small");
        integrate_until(u, y, k_stop, data, config, curve.samples);
        return curve;
    }

    // sphere: integrate to the collar edge, quadrature across the collar,
    // then close by reflection about the equator slice
    const double k0 = turning_point_k0(data);
    curve.k0 = k0;
    double margin = config.singular_margin > 0.0 ? config.singular_margin : 1e-3 * k0;
    if (!(margin < 0.5 * k0))
        throw invalid_data_error("singular_margin must be well below k0");
    const double k_edge = k0 - margin;

    y = integrate_until(u, y, k_edge, data, config, curve.samples);

    // collar: s = sqrt(k0 - k) removes the vertical-tangent singularity;
    //   du = 2 ds / sqrt(G),  dh = 2 sqrt(1 - F) ds / sqrt(G),  G = F/s^2
    const boost::math::quadrature::gauss<double, 30> quad;
    const double s_edge = std::sqrt(margin);
    double h_acc = y[2];
    double u_acc = u;
    for (int j = kCollarSamples - 1; j >= 0; --j) {
        const double s_hi = s_edge * (j + 1) / kCollarSamples;
        const double s_lo = s_edge * j / kCollarSamples;
        auto du_ds = [&](double s) {
            return 2.0 / std::sqrt(collar_first_integral(s, k0, data) / (s * s));
        };
        auto dh_ds = [&](double s) {
            const double f = collar_first_integral(s, k0, data);
            return 2.0 * std::sqrt(std::max(0.0, 1.0 - f)) / std::sqrt(f / (s * s));
        };
        u_acc += quad.integrate(du_ds, s_lo, s_hi);
        h_acc += quad.integrate(dh_ds, s_lo, s_hi);
        const double k_j = k0 - s_lo * s_lo;
        double kp_j = (j > 0) ? std::sqrt(std::max(0.0, collar_first_integral(s_lo, k0, data)))
                              : 0.0;
        curve.samples.push_back(make_sample(u_acc, {k_j, kp_j, h_acc}, data));
    }

    curve.equator_index = curve.samples.size() - 1;
    curve.u_equator = u_acc;
    curve.h_equator = h_acc;

    // reflect about the slice h = h(k0)
    const std::size_t n_half = curve.equator_index;
    for (std::size_t i = n_half; i-- > 0;) {
        const ProfileSample& s = curve.samples[i];
        curve.samples.push_back(
            {2.0 * u_acc - s.u, s.k, 2.0 * h_acc - s.h, -s.kp, s.hp, s.kpp});
    }
    curve.closed = true;
    return curve;
}

ClosureReport closure_report(const ProfileCurve& profile) {
    if (!profile.closed) throw invalid_data_error("closure report needs a closed profile");
    const std::size_t eq = profile.equator_index;
    const std::size_t window = 5;
    if (eq < window || eq + window >= profile.samples.size())
        throw invalid_data_error("profile too short around the equator");

    // least-squares fit kp ~ a0 + a1*du + a2*du^2 on one side of the equator;
    // a1 estimates k'' at the turning point
    auto side_fit = [&](bool left) {
        double s[5] = {0, 0, 0, 0, 0};  // sums of du^0..du^4
        double r[3] = {0, 0, 0};        // sums of kp*du^0..du^2
        for (std::size_t m = 0; m <= window; ++m) {
            const std::size_t i = left ? eq - m : eq + m;
            const double du = profile.samples[i].u - profile.u_equator;
            const double kp = profile.samples[i].kp;
            double p = 1.0;
            for (int d = 0; d < 5; ++d, p *= du) s[d] += p;
            r[0] += kp;
            r[1] += kp * du;
            r[2] += kp * du * du;
        }
        // solve the 3x3 normal equations by Cramer's rule
        const double m00 = s[0], m01 = s[1], m02 = s[2], m11 = s[2], m12 = s[3], m22 = s[4];
        const double det = m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
                           m02 * (m01 * m12 - m11 * m02);
        const double det1 = m00 * (r[1] * m22 - m12 * r[2]) - r[0] * (m01 * m22 - m12 * m02) +
                            m02 * (m01 * r[2] - r[1] * m02);
        return det1 / det;
    };

    ClosureReport rep;
    rep.kpp_left = side_fit(true);
    rep.kpp_right = side_fit(false);
    rep.kpp_jump = std::abs(rep.kpp_left - rep.kpp_right);
    rep.kpp_analytic =
        -profile.data.c * tan_eps(*profile.k0, profile.data.epsilon) /
        (profile.data.a + profile.data.b);
    return rep;
}

void write_profile_csv(const ProfileCurve& profile, std::ostream& out) {
    out << "u,k,h,kp,hp,kpp\n";
    char buf[160];
    for (const ProfileSample& s : profile.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.u, s.k, s.h,
                      s.kp, s.hp, s.kpp);
        out << buf;
    }
}

}  // namespace wlab
