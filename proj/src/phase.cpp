#include "gasfilt/phase.hpp"

#include <algorithm>
#include <cmath>

#include "gasfilt/roots.hpp"
#include "gasfilt/thermo.hpp"

namespace gasfilt {

namespace {

constexpr double kNearCriticalBand = 1e-4;
constexpr double kSpinodalExclusion = 1e-6;

double spinodal_T_closed(const GasModel& m, double v) {
    switch (m.kind) {
    case ModelKind::VanDerWaals: {
        const double s = 3.0 * v - 1.0;
        return s * s / (4.0 * v * v * v);
    }
    case ModelKind::PengRobinson: {
        const double w = v * v + 2.0 * v - 1.0;
        return 2.0 * (v + 1.0) * (v - 1.0) * (v - 1.0) / (w * w);
    }
    default:
        return -1.0;
    }
}

// Search window in v for spinodal/critical scans on generic models.
std::pair<double, double> v_search_window(const GasModel& m) {
    const double lo = m.domain.v_min + 1e-9 * std::max(1.0, std::fabs(m.domain.v_min));
    const double hi = std::isfinite(m.domain.v_max) ? m.domain.v_max * (1.0 - 1e-9) : 1e4;
    return {lo, hi};
}

struct Residuals {
    double r1, r2;
    double norm() const { return std::fabs(r1) + std::fabs(r2); }
};

Residuals phase_residuals(const GasModel& m, double T, double v1, double v2) {
    const double pv1 = m.phi_v(T, v1);
    const double pv2 = m.phi_v(T, v2);
    return {pv2 - pv1,
            m.phi(T, v2) - m.phi(T, v1) - v2 * pv2 + v1 * pv1};
}

} // namespace

double spinodal_T(const GasModel& m, double v) {
    if (!(v > m.domain.v_min && v < m.domain.v_max))
        throw DomainError("spinodal_T: v=" + std::to_string(v) + " outside domain");
    const double closed = spinodal_T_closed(m, v);
    if (closed > 0.0) return closed;

    // generic: phi_vv(T, v) = 0 solved in T over a log-spaced bracket scan
    auto f = [&](double logT) { return m.phi_vv(std::exp(logT), v); };
    double lo, hi;
    const double l0 = std::log(std::max(m.domain.T_min, 1e-6) * (1.0 + 1e-12));
    const double l1 = std::log(std::isfinite(m.domain.T_max) ? m.domain.T_max : 1e6);
    if (!scan_sign_change(f, l0, l1, 512, lo, hi))
        throw NoRootError("spinodal_T: phi_vv has constant sign in T at v=" +
                          std::to_string(v));
    return std::exp(bisect(f, lo, hi, 1e-15));
}

std::pair<double, double> spinodal_volumes(const GasModel& m, double T) {
    const CriticalPoint cp = critical_point(m);
    if (!(T < cp.T))
        throw SupercriticalError("spinodal_volumes: T=" + std::to_string(T) +
                                 " is not below T_crit=" + std::to_string(cp.T));
    auto f = [&](double v) { return spinodal_T(m, v) - T; };
    const auto [w_lo, w_hi] = v_search_window(m);
    const double v_left = bisect(f, w_lo, cp.v, 1e-14);
    // right root: expand until the spinodal falls back below T
    double hi = cp.v * 2.0;
    while (f(hi) > 0.0 && hi < w_hi) hi *= 2.0;
    const double v_right = bisect(f, cp.v, std::min(hi, w_hi), 1e-14);
    return {v_left, v_right};
}

std::vector<SpinodalPoint> spinodal_curve(const GasModel& m,
                                          const std::vector<double>& v_grid) {
    std::vector<SpinodalPoint> out;
    out.reserve(v_grid.size());
    for (double v : v_grid) out.push_back({v, spinodal_T(m, v)});
    return out;
}

CriticalPoint critical_point(const GasModel& m) {
    const auto [w_lo, w_hi] = v_search_window(m);

    // bracket the maximum of spinodal_T on a coarse log grid
    auto T_of = [&](double v) -> double {
        try {
            return spinodal_T(m, v);
        } catch (const NoRootError&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    const int n_scan = 256;
    double best_v = 0.0, best_T = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_scan; ++i) {
        const double v = w_lo * std::pow(w_hi / w_lo, static_cast<double>(i) / n_scan);
        const double T = T_of(v);
        if (T > best_T) {
            best_T = T;
            best_v = v;
        }
    }
    if (!std::isfinite(best_T) || !(best_T > 0.0))
        throw NoRootError("critical_point: model '" + m.name + "' has no spinodal");

    const double a = best_v / std::pow(w_hi / w_lo, 1.0 / n_scan);
    const double b = best_v * std::pow(w_hi / w_lo, 1.0 / n_scan);
    const double v_star = golden_section_max(T_of, std::max(a, w_lo),
                                             std::min(b, w_hi), 1e-13);
    CriticalPoint cp;
    cp.v = v_star;
    cp.T = spinodal_T(m, v_star);
    cp.p = evaluate_state(m, cp.T, cp.v).p;
    return cp;
}

namespace detail {

std::pair<double, double> coexistence_newton(const GasModel& m, double T,
                                             double v1, double v2,
                                             double res_tol, int max_iter) {
    std::vector<double> history;
    Residuals r = phase_residuals(m, T, v1, v2);
    for (int it = 0; it < max_iter; ++it) {
        history.push_back(r.norm());
        if (r.norm() <= res_tol) return {v1, v2};
        const double a1 = m.phi_vv(T, v1);
        const double a2 = m.phi_vv(T, v2);
        const double det = a1 * a2 * (v2 - v1);
        if (det == 0.0)
            throw ConvergenceError("coexistence_newton: singular Jacobian at T=" +
                                   std::to_string(T), history);
        // J = [[-a1, a2], [v1 a1, -v2 a2]]
        const double dv1 = (-v2 * a2 * r.r1 - a2 * r.r2) / det;
        const double dv2 = (-v1 * a1 * r.r1 - a1 * r.r2) / det;
        double step = 1.0;
        for (int halving = 0; halving < 60; ++halving) {
            const double w1 = v1 - step * dv1;
            const double w2 = v2 - step * dv2;
            if (w1 > m.domain.v_min && w2 > m.domain.v_min && w1 < m.domain.v_max &&
                w2 < m.domain.v_max) {
                const Residuals rn = phase_residuals(m, T, w1, w2);
                if (rn.norm() < r.norm()) {
                    v1 = w1;
                    v2 = w2;
                    r = rn;
                    break;
                }
            }
            step *= 0.5;
            if (halving == 59)
                throw ConvergenceError(
                    "coexistence_newton: damped step stalled at T=" + std::to_string(T),
                    history);
        }
    }
    throw ConvergenceError("coexistence_newton: no convergence at T=" +
                           std::to_string(T) + " after " + std::to_string(max_iter) +
                           " iterations, residual " + std::to_string(r.norm()),
                           history);
}

} // namespace detail

namespace {

// Equal-pressure pair (v1, v2) for a trial pressure between the spinodal
// pressure extrema, liquid root left of v_left, gas root right of v_right.
struct PressurePair {
    const GasModel& m;
    double T, v_left, v_right;

    std::pair<double, double> operator()(double p_star) const {
        auto pres = [&](double v) {
            return m.R_eff * T * m.phi_v(T, v) - p_star;
        };
        const double lo = m.domain.v_min * (1.0 + 1e-13) +
                          (m.domain.v_min == 0.0 ? 1e-13 : 0.0);
        const double v1 = bisect(pres, lo, v_left, 1e-15);
        // the gas root can sit many orders of magnitude out at a low
        // saturation pressure; bisect it in log volume
        double hi = v_right * 2.0;
        while (pres(hi) > 0.0 && hi < 1e30) hi *= 2.0;
        const double v2 = std::exp(bisect(
            [&](double t) { return pres(std::exp(t)); }, std::log(v_right),
            std::log(hi), 1e-15, 400));
        return {v1, v2};
    }
};

} // namespace

CoexistencePoint coexistence_at_T(const GasModel& m, double T) {
    const CriticalPoint cp = critical_point(m);
    if (!(T < cp.T))
        throw SupercriticalError("coexistence_at_T: T=" + std::to_string(T) +
                                 " >= T_crit=" + std::to_string(cp.T));
    if (!(T > 0.0)) throw DomainError("coexistence_at_T: T must be positive");

    const auto [v_left, v_right] = spinodal_volumes(m, T);
    const double p_min =
        std::max(evaluate_state(m, T, v_left).p, 0.0); // local isotherm minimum
    const double p_max = evaluate_state(m, T, v_right).p;
    if (!(p_max > p_min))
        throw ConvergenceError("coexistence_at_T: empty pressure window at T=" +
                               std::to_string(T));

    const PressurePair pair{m, T, v_left, v_right};
    auto gibbs_gap = [&](double p_star) {
        const auto [v1, v2] = pair(p_star);
        return phase_residuals(m, T, v1, v2).r2;
    };
    const double p_hi_edge = p_max - (p_max - p_min) * 1e-9;
    double p_star;
    if (p_min > 0.0) {
        const double p_lo_edge = p_min + (p_max - p_min) * 1e-9;
        p_star = bisect(gibbs_gap, p_lo_edge, p_hi_edge, 1e-15, 300);
    } else {
        // the isotherm minimum sits at negative pressure and the saturation
        // pressure may be exponentially small; walk the lower edge down a
        // log scale until the Gibbs gap changes sign, then bisect in log p
        const bool sign_hi = std::signbit(gibbs_gap(p_hi_edge));
        double p_lo_edge = -1.0;
        for (double f = 1e-1; f >= 1e-30; f *= 1e-1) {
            const double trial = p_max * f;
            if (std::signbit(gibbs_gap(trial)) != sign_hi) {
                p_lo_edge = trial;
                break;
            }
        }
        if (p_lo_edge < 0.0)
            throw ConvergenceError(
                "coexistence_at_T: saturation pressure not bracketed at T=" +
                std::to_string(T));
        p_star = std::exp(bisect(
            [&](double s) { return gibbs_gap(std::exp(s)); },
            std::log(p_lo_edge), std::log(p_hi_edge), 1e-15, 300));
    }
    auto [v1, v2] = pair(p_star);

    // polish on the raw 2x2 system away from the critical neighbourhood,
    // where the Jacobian degenerates
    if (cp.T - T >= kNearCriticalBand)
        std::tie(v1, v2) = detail::coexistence_newton(m, T, v1, v2);

    if (std::fabs(v1 - v_left) < kSpinodalExclusion ||
        std::fabs(v2 - v_right) < kSpinodalExclusion)
        throw ConvergenceError(
            "coexistence_at_T: solution within 1e-6 of a spinodal volume at T=" +
            std::to_string(T));

    CoexistencePoint out;
    out.T = T;
    out.v1 = std::min(v1, v2);
    out.v2 = std::max(v1, v2);
    out.p = evaluate_state(m, T, out.v1).p;
    const Jumps j = transition_jumps(m, out);
    out.dQ = j.dQ;
    out.dW = j.dW;
    out.dEps = j.dEps;
    return out;
}

std::vector<CoexistencePoint> binodal_curve(const GasModel& m,
                                            const std::vector<double>& T_grid) {
    std::vector<CoexistencePoint> out;
    out.reserve(T_grid.size());
    const CriticalPoint cp = critical_point(m);
    bool have_prev = false;
    double prev_v1 = 0, prev_v2 = 0;
    for (double T : T_grid) {
        if (!(T < cp.T))
            throw SupercriticalError("binodal_curve: T=" + std::to_string(T) +
                                     " >= T_crit");
        CoexistencePoint pt;
        bool solved = false;
        if (have_prev && cp.T - T >= kNearCriticalBand) {
            try {
                auto [v1, v2] = detail::coexistence_newton(m, T, prev_v1, prev_v2);
                pt.T = T;
                pt.v1 = std::min(v1, v2);
                pt.v2 = std::max(v1, v2);
                pt.p = evaluate_state(m, T, pt.v1).p;
                const Jumps j = transition_jumps(m, pt);
                pt.dQ = j.dQ;
                pt.dW = j.dW;
                pt.dEps = j.dEps;
                solved = true;
            } catch (const ConvergenceError&) {
                // fall through to the full construction
            }
        }
        if (!solved) pt = coexistence_at_T(m, T);
        prev_v1 = pt.v1;
        prev_v2 = pt.v2;
        have_prev = true;
        out.push_back(pt);
    }
    return out;
}

Jumps transition_jumps(const GasModel& m, const CoexistencePoint& cp) {
    const double T = cp.T;
    const double d_phi = m.phi(T, cp.v2) - m.phi(T, cp.v1);
    const double d_phi_T = m.phi_T(T, cp.v2) - m.phi_T(T, cp.v1);
    Jumps j;
    j.dQ = m.R_eff * T * (d_phi + T * d_phi_T);
    j.dW = -m.R_eff * T * d_phi;
    j.dEps = m.R_eff * T * T * d_phi_T;
    return j;
}

} // namespace gasfilt
