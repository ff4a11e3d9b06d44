#include "gasfilt/thermo.hpp"

#include <cmath>

namespace gasfilt {

namespace {

constexpr double kBoundaryBand = 1e-12; // |.| band mapped to SigmaI/SigmaE
constexpr double kSingularTol = 1e-14;

// Numerator shared by C_p, C_s and the Monge-Ampere residual.
double quadratic_bracket(const GasModel& m, double T, double v) {
    const double pT = m.phi_T(T, v);
    const double pv = m.phi_v(T, v);
    const double pTT = m.phi_TT(T, v);
    const double pTv = m.phi_Tv(T, v);
    const double pvv = m.phi_vv(T, v);
    return T * T * (pTv * pTv - pTT * pvv) + 2.0 * T * (pv * pTv - pT * pvv) +
           pv * pv;
}

} // namespace

const char* to_string(Applicability a) {
    switch (a) {
    case Applicability::Applicable: return "applicable";
    case Applicability::SigmaI: return "sigma_i";
    case Applicability::SigmaE: return "sigma_e";
    case Applicability::NonApplicable: return "non_applicable";
    }
    return "?";
}

ThermoState evaluate_state(const GasModel& m, double T, double v) {
    m.require_in_domain(T, v);
    const double R = m.R_eff;
    const double phi = m.phi(T, v);
    const double phi_T = m.phi_T(T, v);
    const double phi_v = m.phi_v(T, v);
    const double phi_TT = m.phi_TT(T, v);
    const double phi_vv = m.phi_vv(T, v);

    ThermoState s;
    s.T = T;
    s.v = v;
    s.p = R * T * phi_v;
    s.eps = R * T * T * phi_T;
    s.sigma = R * (phi + T * phi_T);
    s.gamma = R * T * (v * phi_v - phi);
    s.eta = R * T * (T * phi_T + v * phi_v);

    const double stab = T * phi_TT + 2.0 * phi_T;
    if (std::fabs(phi_vv) <= kBoundaryBand)
        s.applicability = Applicability::SigmaI;
    else if (std::fabs(stab) <= kBoundaryBand)
        s.applicability = Applicability::SigmaE;
    else if (phi_vv < 0.0 && stab > 0.0)
        s.applicability = Applicability::Applicable;
    else
        s.applicability = Applicability::NonApplicable;
    return s;
}

double heat_capacity_v(const GasModel& m, double T, double v) {
    m.require_in_domain(T, v);
    return m.R_eff * T * (2.0 * m.phi_T(T, v) + T * m.phi_TT(T, v));
}

double heat_capacity_p(const GasModel& m, double T, double v) {
    m.require_in_domain(T, v);
    const double pvv = m.phi_vv(T, v);
    if (std::fabs(pvv) <= kSingularTol)
        throw SingularError("heat_capacity_p: phi_vv vanishes at (T=" +
                            std::to_string(T) + ", v=" + std::to_string(v) + ")");
    return -m.R_eff * quadratic_bracket(m, T, v) / pvv;
}

double sound_speed_sq(const GasModel& m, double T, double v) {
    m.require_in_domain(T, v);
    const double denom = 2.0 * m.phi_T(T, v) + T * m.phi_TT(T, v);
    if (std::fabs(denom) <= kSingularTol)
        throw SingularError("sound_speed_sq: 2 phi_T + T phi_TT vanishes at (T=" +
                            std::to_string(T) + ", v=" + std::to_string(v) + ")");
    return m.R_eff * v * v * quadratic_bracket(m, T, v) / denom;
}

KappaForm kappa_form(const GasModel& m, double T, double v) {
    m.require_in_domain(T, v);
    KappaForm k;
    k.coeff_TT = -m.R_eff * (m.phi_TT(T, v) + 2.0 * m.phi_T(T, v) / T);
    k.coeff_vv = m.R_eff * m.phi_vv(T, v);
    return k;
}

double monge_ampere_residual(const GasModel& m,
                             const std::function<double(double, double)>& F,
                             double T, double v) {
    m.require_in_domain(T, v);
    const double denom = 2.0 * m.phi_T(T, v) + T * m.phi_TT(T, v);
    return quadratic_bracket(m, T, v) - F(v, T) * denom;
}

} // namespace gasfilt
