// Concrete gas models: ideal, reduced van der Waals, reduced Peng-Robinson
// and a truncated virial model, plus the scale maps between physical and
// reduced coordinates and a compatibility check for (thermic, caloric)
// state-equation pairs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gasfilt/gas_model.hpp"

namespace gasfilt {

/// phi = (n/2) ln T + ln v on T > 0, v > 0.
GasModel ideal_gas(double n, double R = 1.0);

/// Reduced van der Waals gas:
///   phi = ln(T^{n/2} (3v - 1)) + 9/(8 v T),  R_eff = 8/3,  v > 1/3.
/// Reproduces p = 8T/(3v-1) - 3/v^2.
GasModel vdw_reduced(double n);

/// Reduced Peng-Robinson gas:
///   phi = ln(T^{n/2} (v - 1)) + artanh((v+1)/sqrt2) / (sqrt2 T),  R_eff = 1,
/// on v > 1. The argument (v+1)/sqrt2 exceeds 1 there, so artanh is taken on
/// its real |x| > 1 branch, artanh(x) = (1/2) ln((x+1)/(x-1)); this is the
/// branch that reproduces p = T/(v-1) - 1/(v^2+2v-1) and the spinodal
/// T = 2(v+1)(v-1)^2 / (v^2+2v-1)^2.
GasModel pr_reduced(double n);

/// One virial coefficient A_k(T) with analytic first and second derivatives.
struct VirialCoefficient {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;

    /// A(T) = c[0] + c[1]/T + c[2]/T^2 + ...
    static VirialCoefficient poly_in_inv_T(std::vector<double> c);
};

struct VirialSpec {
    double n = 3.0;
    std::vector<VirialCoefficient> coefficients; // A_1, A_2, ...
    /// Domain cutoff; < 0 selects the heuristic 2 * max_k |A_k(1)|^{1/k}.
    double v_min_override = -1.0;
};

/// phi = (n/2) ln T + ln v - sum_k A_k(T) v^{-k} / k.
GasModel virial_model(const VirialSpec& spec);

/// Scale factors between physical and reduced coordinates; reduced equals
/// physical divided by the scale.
struct ReductionMap {
    double T_scale = 1, v_scale = 1, p_scale = 1, eps_scale = 1, sigma_scale = 1;

    double T_to_reduced(double T) const { return T / T_scale; }
    double v_to_reduced(double v) const { return v / v_scale; }
    double p_to_reduced(double p) const { return p / p_scale; }
    double eps_to_reduced(double e) const { return e / eps_scale; }
    double sigma_to_reduced(double s) const { return s / sigma_scale; }
    double T_to_physical(double T) const { return T * T_scale; }
    double v_to_physical(double v) const { return v * v_scale; }
    double p_to_physical(double p) const { return p * p_scale; }
    double eps_to_physical(double e) const { return e * eps_scale; }
    double sigma_to_physical(double s) const { return s * sigma_scale; }
};

/// van der Waals critical scales from (a, b, R).
ReductionMap vdw_reduction(double a, double b, double R);

/// Peng-Robinson scales from (alpha, b, R).
ReductionMap pr_reduction(double alpha, double b, double R);

/// Residual (T^{-2} B)_v - (T^{-1} A)_T of the compatibility relation for a
/// thermic equation p = A(v, T) and caloric equation eps = B(v, T), taken by
/// central differences with relative step 1e-5. Vanishes exactly when the
/// pair derives from one potential.
double compatibility_residual(const std::function<double(double, double)>& A,
                              const std::function<double(double, double)>& B,
                              double T, double v);

/// CLI model selection: "ideal", "vdw", "pr", or "virial:<file>" where
/// <file> is a JSON array of 1/T-polynomial coefficient lists, one per A_k.
GasModel model_from_string(const std::string& spec, double n);

} // namespace gasfilt
