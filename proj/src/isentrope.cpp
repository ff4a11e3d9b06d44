#include "gasfilt/isentrope.hpp"

#include <cmath>

#include "gasfilt/roots.hpp"
#include "gasfilt/thermo.hpp"

namespace gasfilt {

Isentrope::Isentrope(GasModel model, double sigma0)
    : model_(std::move(model)), sigma0_(sigma0), level_(sigma0 / model_.R_eff) {
    if (model_.kind == ModelKind::VanDerWaals || model_.kind == ModelKind::PengRobinson) {
        form_ = model_.kind == ModelKind::VanDerWaals ? IsentropeForm::VdwPower
                                                      : IsentropeForm::PrPower;
        const double alpha = 1.0 + 2.0 / model_.n;
        exponent_ = 1.0 - alpha; // -2/n
        c_ = std::exp(2.0 * level_ / model_.n - 1.0);
    }
}

double Isentrope::power_constant() const {
    if (form_ == IsentropeForm::Numeric)
        throw ParamError("isentrope of model '" + model_.name + "' has no power form");
    return c_;
}

double Isentrope::power_exponent() const {
    if (form_ == IsentropeForm::Numeric)
        throw ParamError("isentrope of model '" + model_.name + "' has no power form");
    return exponent_;
}

double Isentrope::closed_form_temperature(double v) const {
    switch (form_) {
    case IsentropeForm::VdwPower:
        return c_ * std::pow(3.0 * v - 1.0, exponent_);
    case IsentropeForm::PrPower:
        return c_ * std::pow(v - 1.0, exponent_);
    case IsentropeForm::Numeric:
        throw ParamError("isentrope of model '" + model_.name + "' has no power form");
    }
    return 0.0;
}

double Isentrope::temperature(double v, double T_hint) const {
    if (!(v > model_.domain.v_min && v < model_.domain.v_max))
        throw DomainError("isentrope: v=" + std::to_string(v) + " outside domain");

    auto f = [&](double T) { return model_.phi(T, v) + T * model_.phi_T(T, v) - level_; };
    auto df = [&](double T) { return 2.0 * model_.phi_T(T, v) + T * model_.phi_TT(T, v); };

    const double T_floor = std::max(model_.domain.T_min, 1e-6);
    const double T_ceil =
        std::isfinite(model_.domain.T_max) ? model_.domain.T_max : 1e6;

    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    if (T_hint > 0.0) {
        const double a = std::max(T_floor, T_hint * 0.5);
        const double b = std::min(T_ceil, T_hint * 2.0);
        if (a < b && f(a) < 0.0 && f(b) > 0.0) {
            lo = a;
            hi = b;
            bracketed = true;
        }
    }
    if (!bracketed) {
        double llo, lhi;
        auto g = [&](double t) { return f(std::exp(t)); };
        if (!scan_sign_change(g, std::log(T_floor), std::log(T_ceil), 256, llo, lhi))
            throw NoRootError("isentrope: entropy level " + std::to_string(sigma0_) +
                              " unattainable at v=" + std::to_string(v));
        lo = std::exp(llo);
        hi = std::exp(lhi);
    }
    const double T = newton_bisect(f, df, lo, hi, 1e-13);
    if (!(df(T) > 0.0))
        throw NoRootError("isentrope: eps_T <= 0 at the root for v=" +
                          std::to_string(v) + " (level crosses a fold)");
    return T;
}

double Isentrope::pressure(double v) const {
    const double T = temperature(v);
    return model_.R_eff * T * model_.phi_v(T, v);
}

double Isentrope::sound_speed_sq(double v) const {
    return gasfilt::sound_speed_sq(model_, temperature(v), v);
}

Isentrope make_isentrope(const GasModel& model, double sigma0) {
    return Isentrope(model, sigma0);
}

double sigma0_from_power_constant(const GasModel& model, double c) {
    if (model.kind != ModelKind::VanDerWaals && model.kind != ModelKind::PengRobinson)
        throw ParamError("power-law constant only defined for vdw and pr models");
    if (!(c > 0.0)) throw ParamError("power-law constant must be positive");
    return model.R_eff * model.n * (std::log(c) + 1.0) / 2.0;
}

} // namespace gasfilt
