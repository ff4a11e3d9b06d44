#include "gasfilt/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "gasfilt/quadrature.hpp"
#include "gasfilt/roots.hpp"
#include "gasfilt/thermo.hpp"

namespace gasfilt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvertTol = 1e-9;

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

void MediumSpec::validate() const {
    if (!(mu > 0.0)) throw ParamError("medium: mu must be positive");
    if (const auto* iso = std::get_if<Isotropic>(&permeability)) {
        if (!(iso->k > 0.0)) throw ParamError("medium: permeability must be positive");
        return;
    }
    const auto& an = std::get<HomogeneousAnisotropic>(permeability);
    for (double k : an.eigs)
        if (!(k > 0.0)) throw ParamError("medium: permeability eigenvalues must be positive");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double g = dot(an.frame[i], an.frame[j]);
            if (std::fabs(g - (i == j ? 1.0 : 0.0)) > 1e-12)
                throw ParamError("medium: eigenframe is not orthonormal");
        }
}

double MediumSpec::scalar_permeability() const {
    if (const auto* iso = std::get_if<Isotropic>(&permeability)) return iso->k;
    return 1.0;
}

double QProfile::derivative(double v) const {
    const double k = medium_.scalar_permeability();
    return iso_.sound_speed_sq(v) * k / (v * v * v * medium_.mu);
}

double QProfile::value(double v) const {
    if (!(v >= sample_v_.front() && v <= sample_v_.back()))
        throw DomainError("QProfile::value: v=" + std::to_string(v) +
                          " outside the sampled range");
    // nearest sample at or above v, then a partial panel
    const auto it = std::lower_bound(sample_v_.begin(), sample_v_.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - sample_v_.begin());
    if (i < sample_v_.size() && sample_v_[i] == v) return sample_q_[i];
    const double v_hi = sample_v_[i];
    const double k = medium_.scalar_permeability();
    double T_hint = -1.0;
    auto integrand = [&](double x) {
        const double T = iso_.temperature(x, T_hint);
        T_hint = T;
        return gasfilt::sound_speed_sq(iso_.model(), T, x) * k /
               (x * x * x * medium_.mu);
    };
    return sample_q_[i] - integrate_adaptive(integrand, v, v_hi, 1e-13, 1e-11);
}

int QProfile::branch_of(double v) const {
    // branch intervals are open at fold points but closed at the two ends of
    // the sampled range
    for (const auto& b : branches_) {
        const bool lo_ok = v > b.v_lo || (v == b.v_lo && b.v_lo == v_min());
        const bool hi_ok = v < b.v_hi || (v == b.v_hi && b.v_hi == v_ref());
        if (lo_ok && hi_ok) return b.id;
    }
    return -1;
}

std::vector<std::pair<double, int>> QProfile::invert(double u) const {
    std::vector<std::pair<double, int>> out;
    for (const auto& b : branches_) {
        // the Q-values at the sampled range ends are attainable; fold values
        // are not (v is not locally determined there)
        if (u == b.q_lo && b.v_lo == v_min()) {
            out.emplace_back(b.v_lo, b.id);
            continue;
        }
        if (u == b.q_hi && b.v_hi == v_ref()) {
            out.emplace_back(b.v_hi, b.id);
            continue;
        }
        if (!(u > b.q_min() && u < b.q_max())) continue;

        // walk the sample nodes inside the branch, bracketing the unique
        // crossing of the strictly monotone Q
        double x_prev = b.v_lo;
        double q_prev = b.q_lo;
        const auto first =
            std::upper_bound(sample_v_.begin(), sample_v_.end(), b.v_lo);
        double x_cross_lo = b.v_lo, x_cross_hi = b.v_hi;
        for (auto it = first;; ++it) {
            double x, q;
            if (it != sample_v_.end() && *it < b.v_hi) {
                const std::size_t i = static_cast<std::size_t>(it - sample_v_.begin());
                x = sample_v_[i];
                q = sample_q_[i];
            } else {
                x = b.v_hi;
                q = b.q_hi;
            }
            if ((q_prev - u) * (q - u) <= 0.0) {
                x_cross_lo = x_prev;
                x_cross_hi = x;
                break;
            }
            x_prev = x;
            q_prev = q;
            if (x == b.v_hi) break;
        }

        double vv = bisect([&](double x) { return value(x) - u; }, x_cross_lo,
                           x_cross_hi, 1e-14);
        for (int it2 = 0; it2 < 8; ++it2) { // Newton polish on the true Q
            const double r = value(vv) - u;
            if (std::fabs(r) <= 0.01 * kInvertTol) break;
            const double d = derivative(vv);
            if (d == 0.0) break;
            const double cand = vv - r / d;
            if (!(cand > b.v_lo && cand < b.v_hi)) break;
            vv = cand;
        }
        out.emplace_back(vv, b.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QProfile build_q_profile(const Isentrope& iso, const MediumSpec& medium,
                         std::pair<double, double> v_range, int samples) {
    medium.validate();
    if (samples < 64) throw ParamError("build_q_profile: need at least 64 samples");
    const auto [v_lo, v_hi] = v_range;
    const auto& dom = iso.model().domain;
    if (!(v_lo < v_hi) || !(v_lo > dom.v_min) || !(v_hi < dom.v_max))
        throw DomainError("build_q_profile: v_range outside the isentrope domain");

    QProfile prof(iso, medium);
    auto& vs = prof.sample_v_;
    auto& qs = prof.sample_q_;
    auto& dqs = prof.sample_dq_;
    vs.resize(samples);
    qs.resize(samples);
    dqs.resize(samples);

    const double k = medium.scalar_permeability();
    double T_hint = -1.0;
    auto integrand = [&](double x) {
        const double T = iso.temperature(x, T_hint);
        T_hint = T;
        return gasfilt::sound_speed_sq(iso.model(), T, x) * k /
               (x * x * x * medium.mu);
    };

    for (int i = 0; i < samples; ++i)
        vs[i] = v_lo + (v_hi - v_lo) * static_cast<double>(i) / (samples - 1);

    // cumulative from the reference point at the top of the range
    qs[samples - 1] = 0.0;
    for (int i = samples - 2; i >= 0; --i)
        qs[i] = qs[i + 1] - integrate_adaptive(integrand, vs[i], vs[i + 1], 1e-13, 1e-10);
    for (int i = 0; i < samples; ++i) dqs[i] = prof.derivative(vs[i]);

    // fold points: refined zeros of Q' between samples of opposite sign,
    // scanning a 4x refinement so narrow sign dips are not missed
    std::vector<double> folds;
    auto dq = [&](double v) { return prof.derivative(v); };
    const int refine = 4;
    double x_prev = vs[0];
    double f_prev = dqs[0];
    for (int i = 0; i + 1 < samples; ++i) {
        for (int r = 1; r <= refine; ++r) {
            const double x = vs[i] + (vs[i + 1] - vs[i]) * static_cast<double>(r) / refine;
            const double fx = dq(x);
            if (fx == 0.0 || std::signbit(fx) != std::signbit(f_prev))
                folds.push_back(bisect(dq, x_prev, x, 1e-13));
            x_prev = x;
            f_prev = fx;
        }
    }

    std::vector<double> edges;
    edges.push_back(v_lo);
    for (double f : folds) edges.push_back(f);
    edges.push_back(v_hi);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        QBranch b;
        b.id = static_cast<int>(i);
        b.v_lo = edges[i];
        b.v_hi = edges[i + 1];
        b.q_lo = prof.value(b.v_lo);
        b.q_hi = prof.value(b.v_hi);
        b.increasing = b.q_hi > b.q_lo;
        prof.branches_.push_back(b);
    }
    return prof;
}

double vdw_invertibility_threshold(double n) {
    if (!(n > 2.0))
        throw ParamError("vdw_invertibility_threshold: need n > 2, got " +
                         std::to_string(n));
    const double a = 1.0 + 2.0 / n;
    return std::pow(1.0 + a, 1.0 + a) * std::pow(2.0 - a, 2.0 - a) / (4.0 * a);
}

double pr_invertibility_threshold(double n) {
    if (!(n > 2.0))
        throw NoRootError("pr_invertibility_threshold: fold cubic has no root on "
                          "v > 1 for n <= 2 (alpha >= 2)");
    const double a = 1.0 + 2.0 / n;
    auto cubic = [a](double v) {
        return ((a - 2.0) * v + 3.0 * a) * v * v + (a + 2.0) * v - a + 4.0;
    };
    // cubic(1) = 4a + 4 > 0; leading coefficient a-2 < 0, so it crosses once
    double hi = 2.0;
    while (cubic(hi) > 0.0 && hi < 1e12) hi *= 2.0;
    if (cubic(hi) > 0.0)
        throw NoRootError("pr_invertibility_threshold: no real root with v > 1");
    const double v0 = bisect(cubic, 1.0, hi, 1e-15);
    const double w = v0 * v0 + 2.0 * v0 - 1.0;
    return 2.0 / a * (v0 + 1.0) * std::pow(v0 - 1.0, a + 1.0) / (w * w);
}

std::vector<FieldSample> point_source_field(const QProfile& profile,
                                            const SourceSpec& src,
                                            const std::array<double, 3>& x) {
    const double dx = x[0] - src.position[0];
    const double dy = x[1] - src.position[1];
    const double dz = x[2] - src.position[2];
    const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(r > 0.0))
        throw SingularPointError("point_source_field: evaluation at the source");
    const double u = src.intensity / (4.0 * kPi * r);
    std::vector<FieldSample> out;
    for (const auto& [v, id] : profile.invert(u))
        out.push_back({v, profile.isentrope().temperature(v), id});
    return out;
}

namespace {
void require_positive_eigs(const HomogeneousAnisotropic& k) {
    for (double e : k.eigs)
        if (!(e > 0.0))
            throw ParamError("anisotropic map: permeability eigenvalues must be "
                             "positive");
}
} // namespace

std::array<double, 3> anisotropic_to_isotropic(const HomogeneousAnisotropic& k,
                                               const std::array<double, 3>& x) {
    require_positive_eigs(k);
    std::array<double, 3> y{};
    for (int i = 0; i < 3; ++i) y[i] = dot(k.frame[i], x) / std::sqrt(k.eigs[i]);
    return y;
}

std::array<double, 3> isotropic_to_anisotropic(const HomogeneousAnisotropic& k,
                                               const std::array<double, 3>& y) {
    require_positive_eigs(k);
    std::array<double, 3> x{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const double c = std::sqrt(k.eigs[i]) * y[i];
        for (int j = 0; j < 3; ++j) x[j] += c * k.frame[i][j];
    }
    return x;
}

} // namespace gasfilt
