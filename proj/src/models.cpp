#include "gasfilt/models.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace gasfilt {

namespace {

void require_positive_n(double n) {
    if (!(n > 0.0)) throw ParamError("degrees of freedom must be positive, got " +
                                     std::to_string(n));
}

// artanh on the real |x| > 1 branch used by the reduced Peng-Robinson model.
double artanh_outer(double x) { return 0.5 * std::log((x + 1.0) / (x - 1.0)); }

} // namespace

GasModel ideal_gas(double n, double R) {
    require_positive_n(n);
    if (!(R > 0.0)) throw ParamError("gas constant must be positive");
    GasModel m;
    m.kind = ModelKind::Ideal;
    m.name = "ideal";
    m.n = n;
    m.R_eff = R;
    m.domain = Domain{0.0, std::numeric_limits<double>::infinity(), 0.0,
                      std::numeric_limits<double>::infinity()};
    m.phi = [n](double T, double v) { return 0.5 * n * std::log(T) + std::log(v); };
    m.phi_T = [n](double T, double) { return 0.5 * n / T; };
    m.phi_v = [](double, double v) { return 1.0 / v; };
    m.phi_TT = [n](double T, double) { return -0.5 * n / (T * T); };
    m.phi_Tv = [](double, double) { return 0.0; };
    m.phi_vv = [](double, double v) { return -1.0 / (v * v); };
    return m;
}

GasModel vdw_reduced(double n) {
    require_positive_n(n);
    GasModel m;
    m.kind = ModelKind::VanDerWaals;
    m.name = "vdw";
    m.n = n;
    m.R_eff = 8.0 / 3.0;
    m.domain = Domain{0.0, std::numeric_limits<double>::infinity(), 1.0 / 3.0,
                      std::numeric_limits<double>::infinity()};
    m.phi = [n](double T, double v) {
        return 0.5 * n * std::log(T) + std::log(3.0 * v - 1.0) + 9.0 / (8.0 * v * T);
    };
    m.phi_T = [n](double T, double v) {
        return 0.5 * n / T - 9.0 / (8.0 * v * T * T);
    };
    m.phi_v = [](double T, double v) {
        return 3.0 / (3.0 * v - 1.0) - 9.0 / (8.0 * v * v * T);
    };
    m.phi_TT = [n](double T, double v) {
        return -0.5 * n / (T * T) + 9.0 / (4.0 * v * T * T * T);
    };
    m.phi_Tv = [](double T, double v) { return 9.0 / (8.0 * v * v * T * T); };
    m.phi_vv = [](double T, double v) {
        const double s = 3.0 * v - 1.0;
        return -9.0 / (s * s) + 9.0 / (4.0 * v * v * v * T);
    };
    return m;
}

GasModel pr_reduced(double n) {
    require_positive_n(n);
    const double sqrt2 = std::sqrt(2.0);
    GasModel m;
    m.kind = ModelKind::PengRobinson;
    m.name = "pr";
    m.n = n;
    m.R_eff = 1.0;
    m.domain = Domain{0.0, std::numeric_limits<double>::infinity(), 1.0,
                      std::numeric_limits<double>::infinity()};
    m.phi = [n, sqrt2](double T, double v) {
        return 0.5 * n * std::log(T) + std::log(v - 1.0) +
               artanh_outer((v + 1.0) / sqrt2) / (sqrt2 * T);
    };
    m.phi_T = [n, sqrt2](double T, double v) {
        return 0.5 * n / T - artanh_outer((v + 1.0) / sqrt2) / (sqrt2 * T * T);
    };
    m.phi_v = [](double T, double v) {
        return 1.0 / (v - 1.0) - 1.0 / (T * (v * v + 2.0 * v - 1.0));
    };
    m.phi_TT = [n, sqrt2](double T, double v) {
        return -0.5 * n / (T * T) +
               2.0 * artanh_outer((v + 1.0) / sqrt2) / (sqrt2 * T * T * T);
    };
    m.phi_Tv = [](double T, double v) {
        return 1.0 / (T * T * (v * v + 2.0 * v - 1.0));
    };
    m.phi_vv = [](double T, double v) {
        const double w = v * v + 2.0 * v - 1.0;
        return -1.0 / ((v - 1.0) * (v - 1.0)) + 2.0 * (v + 1.0) / (T * w * w);
    };
    return m;
}

VirialCoefficient VirialCoefficient::poly_in_inv_T(std::vector<double> c) {
    VirialCoefficient a;
    a.value = [c](double T) {
        double acc = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j)
            acc += c[j] * std::pow(T, -static_cast<double>(j));
        return acc;
    };
    a.d1 = [c](double T) {
        double acc = 0.0;
        for (std::size_t j = 1; j < c.size(); ++j)
            acc += -static_cast<double>(j) * c[j] * std::pow(T, -static_cast<double>(j) - 1.0);
        return acc;
    };
    a.d2 = [c](double T) {
        double acc = 0.0;
        for (std::size_t j = 1; j < c.size(); ++j) {
            const double jj = static_cast<double>(j);
            acc += jj * (jj + 1.0) * c[j] * std::pow(T, -jj - 2.0);
        }
        return acc;
    };
    return a;
}

GasModel virial_model(const VirialSpec& spec) {
    require_positive_n(spec.n);
    for (const auto& a : spec.coefficients)
        if (!a.value || !a.d1 || !a.d2)
            throw ParamError("virial coefficient must supply value, d1 and d2");

    double v_min = spec.v_min_override;
    if (v_min < 0.0) {
        v_min = 0.0;
        for (std::size_t k = 0; k < spec.coefficients.size(); ++k) {
            const double a1 = std::fabs(spec.coefficients[k].value(1.0));
            if (a1 > 0.0)
                v_min = std::max(v_min, 2.0 * std::pow(a1, 1.0 / (k + 1.0)));
        }
    }

    const double n = spec.n;
    const auto coeffs = spec.coefficients;
    GasModel m;
    m.kind = ModelKind::Virial;
    m.name = "virial";
    m.n = n;
    m.R_eff = 1.0;
    m.domain = Domain{0.0, std::numeric_limits<double>::infinity(), v_min,
                      std::numeric_limits<double>::infinity()};
    m.phi = [n, coeffs](double T, double v) {
        double acc = 0.5 * n * std::log(T) + std::log(v);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc -= coeffs[k].value(T) * std::pow(v, -kk) / kk;
        }
        return acc;
    };
    m.phi_T = [n, coeffs](double T, double v) {
        double acc = 0.5 * n / T;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc -= coeffs[k].d1(T) * std::pow(v, -kk) / kk;
        }
        return acc;
    };
    m.phi_v = [coeffs](double T, double v) {
        double acc = 1.0 / v;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc += coeffs[k].value(T) * std::pow(v, -kk - 1.0);
        }
        return acc;
    };
    m.phi_TT = [n, coeffs](double T, double v) {
        double acc = -0.5 * n / (T * T);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc -= coeffs[k].d2(T) * std::pow(v, -kk) / kk;
        }
        return acc;
    };
    m.phi_Tv = [coeffs](double T, double v) {
        double acc = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc += coeffs[k].d1(T) * std::pow(v, -kk - 1.0);
        }
        return acc;
    };
    m.phi_vv = [coeffs](double T, double v) {
        double acc = -1.0 / (v * v);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            acc -= (kk + 1.0) * coeffs[k].value(T) * std::pow(v, -kk - 2.0);
        }
        return acc;
    };
    return m;
}

ReductionMap vdw_reduction(double a, double b, double R) {
    if (!(a > 0.0 && b > 0.0 && R > 0.0))
        throw ParamError("vdw_reduction: a, b, R must be positive");
    ReductionMap r;
    r.T_scale = 8.0 * a / (27.0 * R * b);
    r.v_scale = 3.0 * b;
    r.p_scale = a / (27.0 * b * b);
    r.eps_scale = a / (9.0 * b);
    r.sigma_scale = 3.0 * R / 8.0;
    return r;
}

ReductionMap pr_reduction(double alpha, double b, double R) {
    if (!(alpha > 0.0 && b > 0.0 && R > 0.0))
        throw ParamError("pr_reduction: alpha, b, R must be positive");
    ReductionMap r;
    r.T_scale = alpha / (b * R);
    r.v_scale = b;
    r.p_scale = alpha / (b * b);
    r.eps_scale = alpha / b;
    r.sigma_scale = R;
    return r;
}

double compatibility_residual(const std::function<double(double, double)>& A,
                              const std::function<double(double, double)>& B,
                              double T, double v) {
    const double hv = 1e-5 * std::max(std::fabs(v), 1.0);
    const double hT = 1e-5 * std::max(std::fabs(T), 1.0);
    const double dBv =
        (B(v + hv, T) - B(v - hv, T)) / (2.0 * hv * T * T);
    const double dAT = (A(v, T + hT) / (T + hT) - A(v, T - hT) / (T - hT)) /
                       (2.0 * hT);
    return dBv - dAT;
}

GasModel model_from_string(const std::string& spec, double n) {
    if (spec == "ideal") return ideal_gas(n);
    if (spec == "vdw") return vdw_reduced(n);
    if (spec == "pr") return pr_reduced(n);
    const std::string prefix = "virial:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string path = spec.substr(prefix.size());
        std::ifstream in(path);
        if (!in) throw ParamError("cannot open virial coefficient file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParamError("bad virial coefficient file '" + path + "': " + e.what());
        }
        if (!j.is_array())
            throw ParamError("virial coefficient file must hold an array of arrays");
        VirialSpec vs;
        vs.n = n;
        for (const auto& row : j) {
            if (!row.is_array())
                throw ParamError("each virial coefficient must be a list of numbers");
            std::vector<double> c;
            for (const auto& x : row) c.push_back(x.get<double>());
            vs.coefficients.push_back(VirialCoefficient::poly_in_inv_T(std::move(c)));
        }
        return virial_model(vs);
    }
    throw ParamError("unknown model '" + spec + "' (expected ideal, vdw, pr, virial:<file>)");
}

} // namespace gasfilt
