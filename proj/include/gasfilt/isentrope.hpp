// The isentrope T = tau(v, sigma0): level set of the specific entropy
// sigma = R (phi + T phi_T). The equation solved for each v is
//
//   phi + T phi_T = sigma0 / R_eff,
//
// whose T-derivative is eps_T / (R T) > 0 on the applicable region, so tau
// is found by a bracketed, monotone Newton iteration. For the van der Waals
// and Peng-Robinson models tau also has the closed power-law form
// T = c g(v)^{1-alpha} with g = 3v-1 (vdW) or v-1 (PR), alpha = 1 + 2/n and
// c = exp(2 sigma0 / (R_eff n) - 1); the constant is attached for
// cross-checks and scenario construction.
#pragma once

#include <optional>

#include "gasfilt/gas_model.hpp"

namespace gasfilt {

enum class IsentropeForm { VdwPower, PrPower, Numeric };

class Isentrope {
public:
    Isentrope(GasModel model, double sigma0);

    /// tau(v); Newton-solved, NoRootError if the level is unattainable at v
    /// or the root falls where eps_T <= 0. A positive T_hint narrows the
    /// initial bracket (useful in sweeps along v); the result is identical
    /// with or without it.
    double temperature(double v, double T_hint = -1.0) const;

    /// p(tau(v), v).
    double pressure(double v) const;

    /// C_s(tau(v), v); equal to -v^2 dp/dv along the isentrope.
    double sound_speed_sq(double v) const;

    double sigma0() const { return sigma0_; }
    const GasModel& model() const { return model_; }

    IsentropeForm form() const { return form_; }
    /// c and 1-alpha of the attached power law (power forms only).
    double power_constant() const;
    double power_exponent() const;
    /// Closed-form tau for the tagged models, for cross-checking.
    double closed_form_temperature(double v) const;

private:
    GasModel model_;
    double sigma0_;
    double level_; // sigma0 / R_eff
    IsentropeForm form_ = IsentropeForm::Numeric;
    double c_ = 0.0;
    double exponent_ = 0.0;
};

Isentrope make_isentrope(const GasModel& model, double sigma0);

/// sigma0 that makes the attached power law carry constant c (vdW and PR).
double sigma0_from_power_constant(const GasModel& model, double c);

} // namespace gasfilt
