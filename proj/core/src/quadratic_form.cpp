#include "wlab/quadratic_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wlab/geometry.hpp"

namespace wlab {

namespace {

constexpr long kMaxChartSteps = 50'000'000;

double clamp01(double t) {
    if (t < -1e-12 || t > 1.0 + 1e-12) throw domain_error("f: argument outside [0,1]");
    return std::clamp(t, 0.0, 1.0);
}

}  // namespace

AnalyticF::AnalyticF(const WeingartenData& data, int order) : data_(data) {
    data.require_two_a_plus_b_nonzero();
    const double beta = data.c - data.epsilon * data.a;
    if (beta == 0.0) throw invalid_data_error("f undefined when c = eps*a");
    radius_ = std::abs(beta) / std::abs(data.a);
    switch_radius_ = std::min(0.1, radius_ / 4.0);

    // a_0 = eps*(2a+b)/(2*(c-eps*a)), then
    // a_{n+1} = a_n * eps * (2a+b - (n+2)a) / ((c-eps*a) * (n+3))
    const double m = 2.0 * data.a + data.b;
    coeffs_.resize(static_cast<std::size_t>(std::max(order, 2)));
    coeffs_[0] = data.epsilon * m / (2.0 * beta);
    for (std::size_t n = 0; n + 1 < coeffs_.size(); ++n)
        coeffs_[n + 1] = coeffs_[n] * data.epsilon * (m - (static_cast<double>(n) + 2.0) * data.a) /
                         (beta * (static_cast<double>(n) + 3.0));
}

double AnalyticF::eval_closed(double t) const {
    t = clamp01(t);
    if (t == 0.0) return coeffs_[0];
    const double beta = data_.c - data_.epsilon * data_.a;
    const double m = 2.0 * data_.a + data_.b;
    const double sigma = data_.epsilon * data_.a * t / beta;
    if (sigma <= -1.0)
        throw domain_error("f: power base non-positive at t = " + std::to_string(t));
    const double g = std::expm1(m / data_.a * std::log1p(sigma));
    return (beta * g - data_.epsilon * m * t) / (data_.epsilon * (data_.a + data_.b) * t * t);
}

double AnalyticF::eval_series(double t) const {
    t = clamp01(t);
    if (t >= radius_)
        throw domain_error("f series: argument beyond the convergence radius");
    double acc = 0.0;
    for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * t + coeffs_[n];
    return acc;
}

double AnalyticF::prime_closed(double t) const {
    t = clamp01(t);
    if (t == 0.0) return coeffs_[1];
    const double beta = data_.c - data_.epsilon * data_.a;
    const double m = 2.0 * data_.a + data_.b;
    const double sigma = data_.epsilon * data_.a * t / beta;
    if (sigma <= -1.0)
        throw domain_error("f': power base non-positive at t = " + std::to_string(t));
    const double g = std::expm1(m / data_.a * std::log1p(sigma));
    const double bgp = data_.epsilon * m * std::exp((m - data_.a) / data_.a * std::log1p(sigma));
    return ((bgp - data_.epsilon * m) * t - 2.0 * (beta * g - data_.epsilon * m * t)) /
           (data_.epsilon * (data_.a + data_.b) * t * t * t);
}

double AnalyticF::prime_series(double t) const {
    t = clamp01(t);
    if (t >= radius_)
        throw domain_error("f' series: argument beyond the convergence radius");
    double acc = 0.0;
    for (std::size_t n = coeffs_.size(); n-- > 1;)
        acc = acc * t + static_cast<double>(n) * coeffs_[n];
    return acc;
}

double AnalyticF::operator()(double t) const {
    t = clamp01(t);
    return t < switch_radius_ ? eval_series(t) : eval_closed(t);
}

double AnalyticF::prime(double t) const {
    t = clamp01(t);
    return t < switch_radius_ ? prime_series(t) : prime_closed(t);
}

namespace {

// chart state advanced in the conformal coordinate
struct ChartState {
    double u, k, kp, h;
};

struct ChartDeriv {
    const WeingartenData& data;

    // w = du/d(u~) = sqrt(kappa2 G / kappa1); all fields are smooth through
    // the equator because kpp stays negative on the whole admissible range
    std::array<double, 4> operator()(const ChartState& s) const {
        const double kpp = second_derivative_k(s.k, s.kp, data);
        if (!(kpp < 0.0)) throw degenerate_chart_error("second fundamental form degenerated");
        const double hp2 = std::max(0.0, 1.0 - s.kp * s.kp);
        const EpsTrig t = trig_eps(s.k, data.epsilon);
        const double p = -hp2 * t.sin_eps * t.cos_eps / kpp;  // kappa2*G/kappa1
        const double w = std::sqrt(p);
        return {w, s.kp * w, kpp * w, std::sqrt(hp2) * w};
    }
};

ChartState rk4_chart(const ChartState& s, double h, const ChartDeriv& f) {
    auto step = [](const ChartState& y, double c, const std::array<double, 4>& d) {
        return ChartState{y.u + c * d[0], y.k + c * d[1], y.kp + c * d[2], y.h + c * d[3]};
    };
    const auto d1 = f(s);
    const auto d2 = f(step(s, 0.5 * h, d1));
    const auto d3 = f(step(s, 0.5 * h, d2));
    const auto d4 = f(step(s, h, d3));
    return {s.u + h / 6.0 * (d1[0] + 2 * d2[0] + 2 * d3[0] + d4[0]),
            s.k + h / 6.0 * (d1[1] + 2 * d2[1] + 2 * d3[1] + d4[1]),
            s.kp + h / 6.0 * (d1[2] + 2 * d2[2] + 2 * d3[2] + d4[2]),
            s.h + h / 6.0 * (d1[3] + 2 * d2[3] + 2 * d3[3] + d4[3])};
}

ChartNode make_node(const ChartState& s, const WeingartenData& data, const AnalyticF& f,
                    bool ablate) {
    const double kpp = second_derivative_k(s.k, s.kp, data);
    if (!(kpp < 0.0)) throw degenerate_chart_error("second fundamental form degenerated");
    const double hp2 = std::max(0.0, 1.0 - s.kp * s.kp);
    const double hp = std::sqrt(hp2);
    const EpsTrig t = trig_eps(s.k, data.epsilon);
    const double big_g = t.sin_eps * t.sin_eps;
    const double kappa1 = -kpp / hp;
    const double kappa2 = hp * t.cot_eps;
    const double p = kappa2 * big_g / kappa1;

    ChartNode n;
    n.u = s.u;
    n.k = s.k;
    n.E = 0.25 * (p - big_g);
    n.F = 0.25 * (p + big_g);
    n.rho = 0.5 * kappa2 * big_g;
    n.D = 0.25 * p * big_g;
    n.h_z = 0.5 * hp * std::sqrt(p);
    n.h = s.h;
    n.nu = s.kp;
    n.f_t = f(hp2);
    n.fp_t = f.prime(hp2);
    n.Q = n.E + (ablate ? 0.0 : n.f_t) * n.h_z * n.h_z;
    return n;
}

}  // namespace

ConformalChart conformal_chart(const ProfileCurve& profile, const WeingartenData& data,
                               int n_v, double step, bool ablate_f) {
    data.require_two_a_plus_b_nonzero();
    if (profile.samples.size() < 4) throw degenerate_chart_error("profile too short");
    if (n_v < 3 || !(step > 0.0)) throw invalid_data_error("chart needs n_v >= 3 and step > 0");

    const bool sphere = profile.closed;
    const double k_top = sphere ? *profile.k0 : profile.samples.back().k;
    const double k_collar = 1e-3 * k_top;
    const double k_stop = sphere ? k_collar : k_top - 1e-9;

    // starting state on the ascending branch at the collar edge; kp comes
    // from the first integral, u and h from the stored curve
    double u0 = 0.0, h0 = 0.0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < profile.samples.size(); ++i) {
        const ProfileSample& s0 = profile.samples[i];
        const ProfileSample& s1 = profile.samples[i + 1];
        if (s0.kp <= 0.0) break;
        if (s0.k <= k_collar && k_collar < s1.k) {
            const double w = (k_collar - s0.k) / (s1.k - s0.k);
            u0 = s0.u + w * (s1.u - s0.u);
            h0 = s0.h + w * (s1.h - s0.h);
            found = true;
            break;
        }
    }
    if (!found) throw degenerate_chart_error("collar edge not bracketed by the profile");

    ConformalChart chart;
    chart.data = data;
    chart.n_v = static_cast<std::size_t>(n_v);
    chart.step = step;
    chart.dv = 2.0 * M_PI / static_cast<double>(n_v);
    chart.ablated = ablate_f;

    const AnalyticF f(data);
    const ChartDeriv deriv{data};
    ChartState s{u0, k_collar, std::sqrt(first_integral(k_collar, data)), h0};
    long steps = 0;
    while (true) {
        chart.rows.push_back(make_node(s, data, f, ablate_f));
        if (++steps > kMaxChartSteps) throw degenerate_chart_error("chart step budget exhausted");
        const ChartState next = rk4_chart(s, step, deriv);
        if (sphere) {
            if (next.kp < 0.0 && next.k < k_stop) break;
        } else {
            if (next.k >= k_stop) break;
        }
        s = next;
    }
    chart.n_u = chart.rows.size();
    if (chart.n_u < 8) throw degenerate_chart_error("chart resolution too coarse");
    return chart;
}

double q_sup_norm(const ConformalChart& chart) {
    double sup_q = 0.0, sup_e = 0.0;
    for (const ChartNode& n : chart.rows) {
        sup_q = std::max(sup_q, std::abs(n.Q));
        sup_e = std::max(sup_e, std::abs(n.E));
    }
    if (sup_e == 0.0) throw degenerate_chart_error("chart has no scale: sup|E| = 0");
    return sup_q / sup_e;
}

IdentityReport identity_checks(const ConformalChart& chart, const WeingartenData& data) {
    IdentityReport rep;
    rep.grid_resolution = chart.n_u;
    const double du = chart.step;
    const double sum = data.a + data.b;
    const double m = 2.0 * data.a + data.b;

    // All fields are constant along v, so the v-legs of the stencils vanish
    // identically and only the u~-direction contributes.
    for (std::size_t i = 1; i + 1 < chart.rows.size(); ++i) {
        const ChartNode& n = chart.rows[i];
        const ChartNode& nl = chart.rows[i - 1];
        const ChartNode& nr = chart.rows[i + 1];

        const double ke = n.rho * n.rho / n.D;
        const double alpha = (n.F - n.E) * n.h_z;
        const double t = 1.0 - n.nu * n.nu;

        const double fd_nu_zbar = 0.5 * (nr.nu - nl.nu) / (2.0 * du);
        rep.nu_identity_residual =
            std::max(rep.nu_identity_residual, std::abs(fd_nu_zbar + alpha * ke / n.rho));

        const double fd_h_zzbar = 0.25 * (nr.h - 2.0 * n.h + nl.h) / (du * du);
        const double rhs_h =
            n.nu * n.rho / (2.0 * ke * sum) * (2.0 * ke * sum - data.epsilon * m * t);
        rep.h_identity_residual =
            std::max(rep.h_identity_residual, std::abs(fd_h_zzbar - rhs_h));

        const double fd_q_zbar = 0.5 * (nr.Q - nl.Q) / (2.0 * du);
        const double bound =
            2.0 * std::abs(n.nu * n.rho * n.h_z * n.h_z * n.h_z * n.fp_t) / n.D * std::abs(n.Q);
        rep.bound_violation = std::max(rep.bound_violation, std::abs(fd_q_zbar) - bound);
    }
    rep.bound_violation = std::max(rep.bound_violation, 0.0);
    return rep;
}

double principal_ratio_identity(const ProfileCurve& profile, const WeingartenData& data,
                                bool ablate_f) {
    data.require_two_a_plus_b_nonzero();
    const AnalyticF f(data);
    const double k_top = profile.closed ? *profile.k0 : profile.samples.back().k;
    const double k_collar = 1e-3 * k_top;

    double worst = 0.0;
    for (const ProfileSample& s : profile.samples) {
        const double t = 1.0 - s.kp * s.kp;
        if (s.k < k_collar || t < 1e-12) continue;
        const double ratio = -s.kpp * tan_eps(s.k, data.epsilon) / t;
        const double rhs = 1.0 + (ablate_f ? 0.0 : t * f(t));
        worst = std::max(worst, std::abs(ratio - rhs));
    }
    return worst;
}

ResidualReport compute_residual_report(const ProfileCurve& profile, const WeingartenData& data,
                                       int n_v, double step, bool ablate_f) {
    const ConformalChart chart = conformal_chart(profile, data, n_v, step, ablate_f);
    const IdentityReport ids = identity_checks(chart, data);
    ResidualReport rep;
    rep.q_sup_norm = q_sup_norm(chart);
    rep.nu_identity_residual = ids.nu_identity_residual;
    rep.h_identity_residual = ids.h_identity_residual;
    rep.ratio_identity_residual = principal_ratio_identity(profile, data, ablate_f);
    rep.grid_resolution = ids.grid_resolution;
    return rep;
}

}  // namespace wlab
