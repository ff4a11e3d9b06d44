// State evaluation, heat capacities, sound speed and the fundamental
// quadratic form, all in terms of the generating potential phi(T, v):
//
//   p     = R T phi_v            eps  = R T^2 phi_T
//   sigma = R (phi + T phi_T)    gamma = R T (v phi_v - phi)
//   eta   = R T (T phi_T + v phi_v)
//
// A state is applicable when phi_vv < 0 and T phi_TT + 2 phi_T > 0; the two
// boundary sets are where projections of the state surface degenerate.
#pragma once

#include <functional>

#include "gasfilt/gas_model.hpp"

namespace gasfilt {

enum class Applicability { Applicable, SigmaI, SigmaE, NonApplicable };

const char* to_string(Applicability a);

struct ThermoState {
    double T = 0, v = 0;
    double p = 0, eps = 0, sigma = 0, gamma = 0, eta = 0;
    Applicability applicability = Applicability::NonApplicable;
};

/// Diagonal coefficients of the quadratic form
///   kappa = coeff_TT dT.dT + coeff_vv dv.dv,
/// negative definite exactly on the applicable region.
struct KappaForm {
    double coeff_TT = 0; // -R (phi_TT + 2 phi_T / T)
    double coeff_vv = 0; //  R phi_vv
    bool negative_definite() const { return coeff_TT < 0.0 && coeff_vv < 0.0; }
};

ThermoState evaluate_state(const GasModel& model, double T, double v);

/// C_v = R T (2 phi_T + T phi_TT) = eps_T.
double heat_capacity_v(const GasModel& model, double T, double v);

/// Closed form that satisfies C_p - C_v + T p_T^2 / p_v = 0.
/// Throws SingularError when |phi_vv| <= 1e-14 (C_p diverges there).
double heat_capacity_p(const GasModel& model, double T, double v);

/// Squared adiabatic sound speed
///   C_s = R v^2 [T^2(phi_Tv^2 - phi_TT phi_vv)
///              + 2T(phi_v phi_vT - phi_T phi_vv) + phi_v^2] / (2 phi_T + T phi_TT).
/// Negative values are meaningful (they flip the sign of Q' along an
/// isentrope). Throws SingularError when |2 phi_T + T phi_TT| <= 1e-14.
double sound_speed_sq(const GasModel& model, double T, double v);

KappaForm kappa_form(const GasModel& model, double T, double v);

/// Residual of the Monge-Ampere relation tying phi to a prescribed sound
/// speed c^2 = R F(v, T) v^2:
///   T^2(phi_Tv^2 - phi_TT phi_vv) + 2T(phi_v phi_vT - phi_T phi_vv)
///   + phi_v^2 - F (2 phi_T + T phi_TT).
double monge_ampere_residual(const GasModel& model,
                             const std::function<double(double, double)>& F,
                             double T, double v);

} // namespace gasfilt
