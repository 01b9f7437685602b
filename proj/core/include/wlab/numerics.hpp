#pragma once

#include <functional>

namespace wlab {

/// Safeguarded root finder on a bracketing interval [lo, hi] with
/// f(lo)*f(hi) <= 0. Takes Newton steps from the midpoint when they stay
/// inside the current bracket, bisection steps otherwise, until the relative
/// width of the bracket drops below rel_tol.
double find_root(const std::function<double(double)>& f,
                 const std::function<double(double)>& fprime, double lo, double hi,
                 double rel_tol = 1e-14);

/// Bisection-only variant for functions without a cheap derivative.
double find_root_bisect(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol = 1e-14);

/// Golden-section minimizer on [lo, hi]; the function is assumed unimodal
/// there. Returns the abscissa of the minimum to absolute tolerance tol.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-8);

}  // namespace wlab
