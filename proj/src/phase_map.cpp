#include "gasfilt/phase_map.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gasfilt/roots.hpp"

namespace gasfilt {

namespace {
constexpr double kTieBand = 1e-9;
}

const char* to_string(Phase p) {
    switch (p) {
    case Phase::Liquid: return "liquid";
    case Phase::Intermediate: return "intermediate";
    case Phase::Gas: return "gas";
    case Phase::Supercritical: return "supercritical";
    }
    return "?";
}

BinodalTable::BinodalTable(std::vector<CoexistencePoint> curve, CriticalPoint critical)
    : curve_(std::move(curve)), critical_(critical) {
    if (curve_.empty()) throw ParamError("BinodalTable: empty curve");
    std::sort(curve_.begin(), curve_.end(),
              [](const CoexistencePoint& a, const CoexistencePoint& b) {
                  return a.T < b.T;
              });
    T_min_ = curve_.front().T;

    std::vector<double> Ts, v1s, v2s;
    for (const auto& cp : curve_) {
        Ts.push_back(cp.T);
        v1s.push_back(cp.v1);
        v2s.push_back(cp.v2);
    }
    if (curve_.back().T < critical_.T) { // close the dome at the critical point
        Ts.push_back(critical_.T);
        v1s.push_back(critical_.v);
        v2s.push_back(critical_.v);
    }
    v1_ = MonotoneCubic(Ts, v1s);
    v2_ = MonotoneCubic(std::move(Ts), std::move(v2s));
}

double BinodalTable::v1_at(double T) const {
    if (T < T_min_)
        throw ExtrapolationError("binodal table does not reach T=" + std::to_string(T));
    return v1_(std::min(T, critical_.T));
}

double BinodalTable::v2_at(double T) const {
    if (T < T_min_)
        throw ExtrapolationError("binodal table does not reach T=" + std::to_string(T));
    return v2_(std::min(T, critical_.T));
}

PhaseLabel classify(const BinodalTable& binodal, double v, double T, int branch_id) {
    PhaseLabel out;
    out.branch_id = branch_id;
    out.v = v;
    out.T = T;
    if (T >= binodal.T_crit()) {
        out.phase = Phase::Supercritical;
        return out;
    }
    const double v1 = binodal.v1_at(T);
    const double v2 = binodal.v2_at(T);
    if (std::fabs(v - v1) <= kTieBand || std::fabs(v - v2) <= kTieBand)
        out.phase = Phase::Intermediate;
    else if (v < v1)
        out.phase = Phase::Liquid;
    else if (v > v2)
        out.phase = Phase::Gas;
    else
        out.phase = Phase::Intermediate;
    return out;
}

PhaseMapResult map_field(const HarmonicField& hf, const QProfile& profile,
                         const BinodalTable& binodal,
                         const std::array<int, 3>& sampling) {
    for (int d = 0; d < 3; ++d)
        if (sampling[d] < 2) throw ParamError("map_field: need >= 2 samples per axis");
    const BoxDomain& box = hf.box();

    auto coord = [&](int d, int i) {
        return box.lower[d] +
               (box.upper[d] - box.lower[d]) * static_cast<double>(i) / (sampling[d] - 1);
    };
    auto at_source = [&](const Point& x) {
        for (const auto& s : hf.sources())
            if (x == s.position) return true;
        return false;
    };

    PhaseMapResult res;
    res.points.reserve(static_cast<std::size_t>(sampling[0]) * sampling[1] * sampling[2]);
    for (int k = 0; k < sampling[2]; ++k)
        for (int j = 0; j < sampling[1]; ++j)
            for (int i = 0; i < sampling[0]; ++i) {
                MapPoint pt;
                pt.x = {coord(0, i), coord(1, j), coord(2, k)};
                if (!at_source(pt.x)) {
                    for (const auto& fs : field_value(hf, profile, pt.x))
                        pt.labels.push_back(
                            classify(binodal, fs.v, fs.T, fs.branch_id));
                }
                res.points.push_back(std::move(pt));
            }

    // label-set changes along grid lines
    auto label_set = [](const MapPoint& p) {
        std::set<std::pair<int, int>> s;
        for (const auto& l : p.labels)
            s.insert({l.branch_id, static_cast<int>(l.phase)});
        return s;
    };
    auto lin = [&](int i, int j, int k) {
        return (static_cast<std::size_t>(k) * sampling[1] + j) * sampling[0] + i;
    };
    for (int k = 0; k < sampling[2]; ++k)
        for (int j = 0; j < sampling[1]; ++j)
            for (int i = 0; i < sampling[0]; ++i)
                for (int axis = 0; axis < 3; ++axis) {
                    const int ni = i + (axis == 0), nj = j + (axis == 1),
                              nk = k + (axis == 2);
                    if (ni >= sampling[0] || nj >= sampling[1] || nk >= sampling[2])
                        continue;
                    const MapPoint& a = res.points[lin(i, j, k)];
                    const MapPoint& b = res.points[lin(ni, nj, nk)];
                    if (label_set(a) != label_set(b))
                        res.interfaces.push_back({a.x, b.x, axis});
                }
    return res;
}

double interface_radius(const HarmonicField& hf, const QProfile& profile,
                        const BinodalTable& binodal, const SourceSpec& src,
                        const Point& dir, double r_lo, double r_hi) {
    const double norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    if (!(norm > 0.0)) throw ParamError("interface_radius: zero direction");

    auto labels_at = [&](double r) {
        Point x{src.position[0] + dir[0] / norm * r, src.position[1] + dir[1] / norm * r,
                src.position[2] + dir[2] / norm * r};
        std::vector<PhaseLabel> out;
        for (const auto& fs : field_value(hf, profile, x))
            out.push_back(classify(binodal, fs.v, fs.T, fs.branch_id));
        return out;
    };
    auto lead_phase = [&](double r) -> int {
        const auto ls = labels_at(r);
        if (ls.empty()) throw NoRootError("interface_radius: no solution at r=" +
                                          std::to_string(r));
        return static_cast<int>(ls.front().phase);
    };

    const int p_lo = lead_phase(r_lo);
    if (lead_phase(r_hi) == p_lo)
        throw NoRootError("interface_radius: same phase at both radii");
    double a = r_lo, b = r_hi;
    for (int i = 0; i < 100 && (b - a) > 1e-12 * (1.0 + b); ++i) {
        const double m = 0.5 * (a + b);
        (lead_phase(m) == p_lo ? a : b) = m;
    }
    return 0.5 * (a + b);
}

} // namespace gasfilt
