#include "wlab/geometry.hpp"

#include <cmath>
#include <limits>

namespace wlab {

bool WeingartenData::basic_valid() const {
    if (epsilon != -1 && epsilon != 1) return false;
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) return false;
    return a != 0.0 && b > 0.0;
}

void WeingartenData::require_basic() const {
    if (!basic_valid())
        throw invalid_data_error("coefficients require epsilon in {-1,+1}, a != 0, b > 0");
}

void WeingartenData::require_sum_nonzero() const {
    require_basic();
    if (a + b == 0.0)
        throw invalid_data_error("a + b = 0: constant-angle regime, excluded");
}

void WeingartenData::require_two_a_plus_b_nonzero() const {
    require_sum_nonzero();
    if (2.0 * a + b == 0.0)
        throw invalid_data_error("2a + b = 0: quadratic-form machinery undefined");
}

const char* to_string(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere: return "Sphere";
        case SurfaceKind::Plane: return "Plane";
        case SurfaceKind::NoOrthogonalRotational: return "NoOrthogonalRotational";
        case SurfaceKind::ExcludedConstantAngle: return "ExcludedConstantAngle";
        case SurfaceKind::Invalid: return "Invalid";
    }
    return "Invalid";
}

EpsTrig trig_eps(double k, int epsilon) {
    if (!(k >= 0.0)) throw domain_error("trig_eps: k must be >= 0");
    if (epsilon == -1) {
        const double ch = std::cosh(k);
        const double sh = std::sinh(k);
        const double ct = (sh == 0.0) ? std::numeric_limits<double>::infinity() : ch / sh;
        return {ch, sh, ct};
    }
    if (epsilon == 1) {
        if (k > 0.0) {
            // nonzero multiples of pi have no cotangent
            const double r = std::remainder(k, M_PI);
            if (std::abs(r) <= 8.0 * std::numeric_limits<double>::epsilon() * k)
                throw domain_error("trig_eps: cot undefined at nonzero multiples of pi");
        }
        const double cs = std::cos(k);
        const double sn = std::sin(k);
        const double ct = (sn == 0.0) ? std::numeric_limits<double>::infinity() : cs / sn;
        return {cs, sn, ct};
    }
    throw domain_error("trig_eps: epsilon must be -1 or +1");
}

double tan_eps(double k, int epsilon) {
    if (!(k >= 0.0)) throw domain_error("tan_eps: k must be >= 0");
    if (epsilon == -1) return std::tanh(k);
    if (k >= M_PI / 2.0) throw domain_error("tan_eps: k must stay below pi/2 on the sphere");
    return std::tan(k);
}

Classification classify(const WeingartenData& data) {
    if (!data.basic_valid())
        return {SurfaceKind::Invalid, "need a != 0 and b > 0"};

    const double sum = data.a + data.b;
    const double c = data.c;

    if (sum == 0.0)
        return {SurfaceKind::ExcludedConstantAngle,
                "a + b = 0 forces a constant angle function; excluded"};

    SurfaceKind kind;
    std::string reason;
    if (sum > 0.0) {
        if (c > 0.0) {
            kind = SurfaceKind::Sphere;
            reason = "a+b > 0, c > 0: closed rotational sphere";
        } else {
            kind = SurfaceKind::Plane;
            reason = "a+b > 0, c <= 0: complete noncompact profile";
        }
    } else {
        if (c >= 0.0) {
            kind = SurfaceKind::Plane;
            reason = "a+b < 0, c >= 0: complete noncompact profile";
        } else if (data.epsilon == -1) {
            kind = SurfaceKind::Sphere;
            reason = "a+b < 0, c < 0 in H^2 x R: closed rotational sphere";
        } else if (c < -data.b) {
            kind = SurfaceKind::Sphere;
            reason = "a+b < 0, c < -b in S^2 x R: closed rotational sphere";
        } else {
            return {SurfaceKind::NoOrthogonalRotational,
                    "a+b < 0, -b <= c < 0 in S^2 x R: axis crossing would force K_e <= 0"};
        }
    }

    // An orthogonal axis crossing has nu^2 = 1, so K_e there equals
    // (c - eps*a)/(a+b); the construction needs that value positive.
    const double ke_axis = (c - data.epsilon * data.a) / sum;
    if (!(ke_axis > 0.0))
        return {SurfaceKind::Invalid, "K_e > 0 violated at axis: (c - eps*a)/(a+b) <= 0"};

    return {kind, reason};
}

double extrinsic_from_nu(double nu, const WeingartenData& data) {
    data.require_sum_nonzero();
    if (!(nu >= -1.0 && nu <= 1.0)) throw domain_error("extrinsic_from_nu: need nu in [-1,1]");
    const double ke = (data.c - data.epsilon * data.a * nu * nu) / (data.a + data.b);
    if (!(ke > 0.0))
        throw nonpositive_extrinsic_error("extrinsic curvature <= 0 at nu^2 = " +
                                          std::to_string(nu * nu));
    return ke;
}

double axis_extrinsic(const WeingartenData& data) {
    data.require_sum_nonzero();
    return (data.c - data.epsilon * data.a) / (data.a + data.b);
}

double gauss_residual(const CurvatureSample& sample, int epsilon) {
    return std::abs(sample.K_i - sample.K_e - epsilon * sample.nu * sample.nu);
}

double weingarten_residual(const CurvatureSample& sample, const WeingartenData& data) {
    return std::abs(data.a * sample.K_i + data.b * sample.K_e - data.c);
}

}  // namespace wlab
