// GasModel: a gas described by its generating potential phi(T, v).
//
// Every thermodynamic quantity handled by this library derives from phi and
// its first and second partials, all supplied analytically by the concrete
// model constructors in models.hpp.
#pragma once

#include <functional>
#include <limits>
#include <string>

#include "gasfilt/errors.hpp"

namespace gasfilt {

enum class ModelKind { Ideal, VanDerWaals, PengRobinson, Virial, Custom };

/// Open rectangle of valid (T, v).
struct Domain {
    double T_min = 0.0;
    double T_max = std::numeric_limits<double>::infinity();
    double v_min = 0.0;
    double v_max = std::numeric_limits<double>::infinity();

    bool contains(double T, double v) const {
        return T > T_min && T < T_max && v > v_min && v < v_max;
    }
};

struct GasModel {
    ModelKind kind = ModelKind::Custom;
    std::string name = "custom";
    double n = 3.0;     ///< degrees of freedom
    double R_eff = 1.0; ///< gas constant in the model's working coordinates
    Domain domain;

    // phi and partials, all (T, v)
    std::function<double(double, double)> phi;
    std::function<double(double, double)> phi_T;
    std::function<double(double, double)> phi_v;
    std::function<double(double, double)> phi_TT;
    std::function<double(double, double)> phi_Tv;
    std::function<double(double, double)> phi_vv;

    void require_in_domain(double T, double v) const {
        if (!domain.contains(T, v))
            throw DomainError("(" + std::to_string(T) + ", " + std::to_string(v) +
                              ") outside the domain of model '" + name + "'");
    }
};

} // namespace gasfilt
