#include "wlab/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace wlab {

double find_root(const std::function<double(double)>& f,
                 const std::function<double(double)>& fprime, double lo, double hi,
                 double rel_tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("find_root: interval does not bracket");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double scale = std::max(std::abs(lo), std::abs(hi));
        if (hi - lo <= rel_tol * scale) break;

        double fx = f(x);
        if (fx == 0.0) return x;
        if (fx * flo < 0.0) {
            hi = x;
        } else {
            lo = x;
            flo = fx;
        }

        double xn = x;
        bool newton_ok = false;
        if (fprime) {
            const double d = fprime(x);
            if (d != 0.0 && std::isfinite(d)) {
                xn = x - fx / d;
                newton_ok = (xn > lo && xn < hi);
            }
        }
        x = newton_ok ? xn : 0.5 * (lo + hi);
    }
    return x;
}

double find_root_bisect(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol) {
    return find_root(f, nullptr, lo, hi, rel_tol);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace wlab
