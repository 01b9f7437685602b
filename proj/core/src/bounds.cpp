#include "wlab/bounds.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "wlab/geometry.hpp"
#include "wlab/jsonio.hpp"
#include "wlab/numerics.hpp"
#include "wlab/profile.hpp"

namespace wlab {

namespace {

void require_estimate_domain(const WeingartenData& data) {
    data.require_two_a_plus_b_nonzero();
    if (data.epsilon != -1)
        throw invalid_data_error("vertical estimate only stated for H^2 x R");
    if (!(data.a + data.b > 0.0) || !(data.c > 0.0))
        throw invalid_data_error("vertical estimate needs a+b > 0 and c > 0");
    if (!(data.c + data.a > 0.0))
        throw domain_error("K_e > 0 fails on [-1,0]: need c + a > 0");
}

double max_term(double nu, const WeingartenData& d) {
    const double x = nu * nu;
    return 1.0 + (2.0 * d.a + d.b) * (1.0 - x) / (2.0 * (d.c + d.a * x));
}

double min_term(double nu, const WeingartenData& d) {
    const double denom = d.c + d.a * nu * nu;
    const double q = (d.a + d.b) / d.a;
    return std::sqrt(std::exp(q * (std::log(d.c + d.a) - std::log(denom))) / denom);
}

// dense grid plus golden-section refinement around the best cell
template <class F>
double extremize(F&& f, bool maximize, int n, double tol) {
    const double lo = -1.0, hi = 0.0;
    int best = 0;
    double best_val = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double nu = lo + (hi - lo) * i / n;
        const double v = f(nu);
        if (maximize ? v > best_val : v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double cell = (hi - lo) / n;
    const double wlo = std::max(lo, lo + (best - 1) * cell);
    const double whi = std::min(hi, lo + (best + 1) * cell);
    auto obj = [&](double nu) { return maximize ? -f(nu) : f(nu); };
    const double refined = f(golden_min(obj, wlo, whi, tol));
    return maximize ? std::max(best_val, refined) : std::min(best_val, refined);
}

}  // namespace

double m_constant_from_extrema(double mx, double mn) {
    return mx > 0.0 ? mx / mn : 1.0;
}

double m_constant(const WeingartenData& data, int grid_points) {
    require_estimate_domain(data);
    const double mx =
        extremize([&](double nu) { return max_term(nu, data); }, true, grid_points, 1e-8);
    const double mn =
        extremize([&](double nu) { return min_term(nu, data); }, false, grid_points, 1e-8);
    return m_constant_from_extrema(mx, mn);
}

double g_prime(double t, const WeingartenData& data, double m_const) {
    require_estimate_domain(data);
    if (!(t >= -1.0 && t <= 1.0)) throw domain_error("g_prime: t outside [-1,1]");
    const double tau = (1.0 - t) * (1.0 + t);
    const double sum = data.a + data.b;
    if (tau < 1e-12) return m_const * std::sqrt(sum) / (data.c + data.a);
    const double denom = data.c + data.a * t * t;
    // ((c+a)/(c+a t^2))^((a+b)/a) - 1 without cancellation
    const double num = std::expm1(sum / data.a * std::log1p(data.a * tau / denom));
    return m_const * std::sqrt(num / (tau * denom));
}

double vertical_bound_C0(const WeingartenData& data, double rel_tol) {
    require_estimate_domain(data);
    const double m_const = m_constant(data);
    auto integrand = [&](double t) { return g_prime(t, data, m_const); };
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, -1.0, 0.0, 12, rel_tol, &err);
}

double horizontal_diameter_c1(const WeingartenData& data) {
    return 2.0 * turning_point_k0(data);
}

double cylinder_radius_c2(double c0, double c1) {
    if (!(c0 > 0.0) || !(c1 > 0.0)) throw domain_error("cylinder radius needs c0, c1 > 0");
    return 2.0 * std::max(c0, c1) + c0;
}

bool BoundsReport::all_pass() const {
    for (const BoundsCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

BoundsReport bounds_report(const WeingartenData& data, double c0_input) {
    BoundsReport rep;
    rep.data = data;
    rep.k0 = turning_point_k0(data);  // propagates NoTurningPoint for planes
    rep.c1 = 2.0 * rep.k0;
    rep.c0_input = c0_input > 0.0 ? c0_input : rep.c1;
    rep.c2 = cylinder_radius_c2(rep.c0_input, rep.c1);

    rep.checks.push_back({"c1_equals_2k0", rep.c1 == 2.0 * rep.k0,
                          std::abs(rep.c1 - 2.0 * rep.k0)});

    rep.vertical_bound_in_scope = data.epsilon == -1 && data.a + data.b > 0.0 &&
                                  data.c > 0.0 && 2.0 * data.a + data.b != 0.0;
    if (!rep.vertical_bound_in_scope) return rep;

    rep.M = m_constant(data);
    rep.C0 = vertical_bound_C0(data);

    const ProfileCurve profile = integrate_profile(data);
    rep.profile_height = profile.h_equator;

    rep.checks.push_back({"height_below_C0", *rep.profile_height <= *rep.C0,
                          *rep.C0 - *rep.profile_height});

    const double c0_tight = vertical_bound_C0(data, 1e-12);
    rep.checks.push_back(
        {"C0_quadrature_stable", std::abs(*rep.C0 - c0_tight) < 1e-8,
         std::abs(*rep.C0 - c0_tight)});

    const double m_fine = m_constant(data, 30000);
    rep.checks.push_back({"M_grid_stable", std::abs(*rep.M - m_fine) < 1e-6 * *rep.M,
                          std::abs(*rep.M - m_fine) / *rep.M});

    const double g_end = g_prime(-1.0, data, *rep.M);
    const double g_near = g_prime(-1.0 + 1e-10, data, *rep.M);
    rep.checks.push_back({"g_prime_endpoint_continuous", std::abs(g_end - g_near) < 1e-8,
                          std::abs(g_end - g_near)});
    return rep;
}

std::string to_json(const BoundsReport& rep) {
    using jsonio::number;
    using jsonio::quoted;
    std::string out = "{\"schema\":1";
    out += ",\"epsilon\":" + std::to_string(rep.data.epsilon);
    out += ",\"a\":" + number(rep.data.a);
    out += ",\"b\":" + number(rep.data.b);
    out += ",\"c\":" + number(rep.data.c);
    out += ",\"k0\":" + number(rep.k0);
    out += ",\"M\":" + (rep.M ? number(*rep.M) : "null");
    out += ",\"C0\":" + (rep.C0 ? number(*rep.C0) : "null");
    out += ",\"c1\":" + number(rep.c1);
    out += ",\"c0_input\":" + number(rep.c0_input);
    out += ",\"c2\":" + number(rep.c2);
    out += ",\"vertical_bound_in_scope\":";
    out += rep.vertical_bound_in_scope ? "true" : "false";
    if (rep.profile_height) out += ",\"profile_height\":" + number(*rep.profile_height);
    out += ",\"checks\":[";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const BoundsCheck& c = rep.checks[i];
        if (i) out += ',';
        out += "{\"name\":" + quoted(c.name);
        out += ",\"pass\":";
        out += c.pass ? "true" : "false";
        out += ",\"residual\":" + number(c.residual) + "}";
    }
    out += "]}";
    return out;
}

}  // namespace wlab
