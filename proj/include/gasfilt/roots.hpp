// Scalar root finding and 1-d maximization helpers.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "gasfilt/errors.hpp"

namespace gasfilt {

using Fn1 = std::function<double(double)>;

/// Plain bisection on a bracket with f(a) and f(b) of opposite sign.
inline double bisect(const Fn1& f, double a, double b, double x_tol = 1e-14,
                     int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw NoRootError("bisect: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (std::signbit(fm) == std::signbit(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (b - a <= x_tol * (1.0 + std::fabs(a) + std::fabs(b))) break;
    }
    return 0.5 * (a + b);
}

/// Newton iteration safeguarded by a bracket; falls back to bisection
/// whenever the Newton step leaves [a, b] or fails to shrink |f|.
inline double newton_bisect(const Fn1& f, const Fn1& df, double a, double b,
                            double f_tol = 1e-13, int max_iter = 100) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw NoRootError("newton_bisect: endpoints do not bracket a sign change");
    double x = 0.5 * (a + b);
    double fx = f(x);
    for (int i = 0; i < max_iter; ++i) {
        if (std::fabs(fx) <= f_tol) return x;
        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double d = df(x);
        double x_next = (d != 0.0) ? x - fx / d : a;
        if (!(x_next > a && x_next < b)) x_next = 0.5 * (a + b);
        x = x_next;
        fx = f(x);
    }
    if (std::fabs(fx) > f_tol * 1e3)
        throw ConvergenceError("newton_bisect: no convergence after " +
                               std::to_string(max_iter) + " iterations, |f|=" +
                               std::to_string(std::fabs(fx)));
    return x;
}

/// Scans [a, b] on n uniform points and returns the first subinterval with a
/// sign change of f. Returns false if f keeps one sign on the whole scan.
inline bool scan_sign_change(const Fn1& f, double a, double b, int n,
                             double& lo, double& hi) {
    double x_prev = a;
    double f_prev = f(a);
    if (f_prev == 0.0) {
        lo = hi = a;
        return true;
    }
    for (int i = 1; i <= n; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / n;
        const double fx = f(x);
        if (fx == 0.0 || std::signbit(fx) != std::signbit(f_prev)) {
            lo = x_prev;
            hi = x;
            return true;
        }
        x_prev = x;
        f_prev = fx;
    }
    return false;
}

/// Golden-section search for the maximum of a unimodal function on [a, b].
inline double golden_section_max(const Fn1& f, double a, double b,
                                 double x_tol = 1e-12, int max_iter = 300) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > x_tol * (1.0 + std::fabs(a)); ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace gasfilt
