// Phase coexistence. Two states (v1, T) and (v2, T) are phase equivalent
// when they share pressure and specific Gibbs energy, which in terms of the
// potential reads
//
//   phi_v(v2, T) - phi_v(v1, T) = 0
//   phi(v2, T) - phi(v1, T) - v2 phi_v(v2, T) + v1 phi_v(v1, T) = 0.
//
// The locus of such pairs is the binodal; the spinodal {phi_vv = 0} bounds
// local stability and its maximum over v is the critical point.
#pragma once

#include <utility>
#include <vector>

#include "gasfilt/gas_model.hpp"

namespace gasfilt {

struct CoexistencePoint {
    double T = 0;
    double v1 = 0; ///< liquid volume, v1 < v2
    double v2 = 0; ///< gas volume
    double p = 0;  ///< common pressure
    double dQ = 0, dW = 0, dEps = 0; ///< transition jumps (heat, work, energy)
};

struct SpinodalPoint {
    double v = 0;
    double T = 0;
};

struct CriticalPoint {
    double T = 0;
    double v = 0;
    double p = 0;
};

struct Jumps {
    double dQ = 0, dW = 0, dEps = 0;
};

/// The unique T with phi_vv(T, v) = 0. Closed forms for the van der Waals
/// and Peng-Robinson models; bracketed bisection in T otherwise.
/// Throws NoRootError when phi_vv keeps one sign (e.g. ideal gas).
double spinodal_T(const GasModel& model, double v);

/// The two spinodal volumes at a subcritical temperature, (v_left, v_right).
std::pair<double, double> spinodal_volumes(const GasModel& model, double T);

/// The spinodal sampled over a volume grid.
std::vector<SpinodalPoint> spinodal_curve(const GasModel& model,
                                          const std::vector<double>& v_grid);

/// Maximum of spinodal_T over v, with the pressure evaluated there.
CriticalPoint critical_point(const GasModel& model);

/// Solves the phase-equivalence system at fixed T < T_crit. The solve
/// brackets a saturation pressure between the spinodal pressure extrema,
/// bisects the Gibbs difference of the equal-pressure pair, and polishes
/// with a damped Newton iteration on (v1, v2).
CoexistencePoint coexistence_at_T(const GasModel& model, double T);

/// Continuation along a temperature grid, reusing each solution as the next
/// initial guess. Throws ConvergenceError naming the failing T.
std::vector<CoexistencePoint> binodal_curve(const GasModel& model,
                                            const std::vector<double>& T_grid);

/// Jumps across the transition:
///   dQ = R T (dphi + T dphi_T),  dW = -R T dphi,  dEps = R T^2 dphi_T,
/// with d* the gas-minus-liquid differences; dEps = dQ + dW identically.
Jumps transition_jumps(const GasModel& model, const CoexistencePoint& cp);

namespace detail {
/// Raw damped Newton on the 2x2 phase-equivalence system from an explicit
/// starting pair; no ordering is imposed on the unknowns.
std::pair<double, double> coexistence_newton(const GasModel& model, double T,
                                             double v1_init, double v2_init,
                                             double res_tol = 1e-12,
                                             int max_iter = 100);
} // namespace detail

} // namespace gasfilt
