// Classification of (v, T) states against a precomputed binodal curve, and
// mapping of a filtration solution into labeled spatial regions.
#pragma once

#include <vector>

#include "gasfilt/interp.hpp"
#include "gasfilt/laplace.hpp"
#include "gasfilt/phase.hpp"

namespace gasfilt {

enum class Phase { Liquid, Intermediate, Gas, Supercritical };

const char* to_string(Phase p);

struct PhaseLabel {
    Phase phase = Phase::Gas;
    int branch_id = 0;
    double v = 0, T = 0;
};

/// Binodal lookup table: monotone cubic interpolation of v1(T) and v2(T)
/// over a solved curve, with the critical point appended as the (T*, v*, v*)
/// endpoint so the table covers temperatures up to T*.
class BinodalTable {
public:
    BinodalTable(std::vector<CoexistencePoint> curve, CriticalPoint critical);

    double v1_at(double T) const; ///< liquid boundary
    double v2_at(double T) const; ///< gas boundary
    double T_crit() const { return critical_.T; }
    double T_min() const { return T_min_; }
    const std::vector<CoexistencePoint>& curve() const { return curve_; }

private:
    std::vector<CoexistencePoint> curve_;
    CriticalPoint critical_;
    double T_min_ = 0;
    MonotoneCubic v1_, v2_;
};

/// Supercritical iff T >= T*; otherwise Liquid / Intermediate / Gas by the
/// position of v against (v1(T), v2(T)), ties within 1e-9 resolved toward
/// Intermediate. ExtrapolationError below the table's lowest temperature.
PhaseLabel classify(const BinodalTable& binodal, double v, double T,
                    int branch_id = 0);

struct MapPoint {
    Point x{0, 0, 0};
    std::vector<PhaseLabel> labels; ///< one per branch carrying a solution
};

/// A label change between two adjacent sample points along a grid line.
struct InterfaceCrossing {
    Point a{0, 0, 0}, b{0, 0, 0};
    int axis = 0;
};

struct PhaseMapResult {
    std::vector<MapPoint> points;
    std::vector<InterfaceCrossing> interfaces;
};

/// Samples the harmonic field on a uniform grid (counts per axis), labels
/// every branch solution at every point, and records the grid-line segments
/// where the label set changes. Points whose u falls outside every branch
/// carry no labels. Sample points coinciding with a source are skipped.
PhaseMapResult map_field(const HarmonicField& hf, const QProfile& profile,
                         const BinodalTable& binodal,
                         const std::array<int, 3>& sampling);

/// Radius at which the radial profile from `src` changes phase along
/// direction `dir` (root of the label boundary between r_lo and r_hi on the
/// given branch); NoRootError when the label does not change.
double interface_radius(const HarmonicField& hf, const QProfile& profile,
                        const BinodalTable& binodal, const SourceSpec& src,
                        const Point& dir, double r_lo, double r_hi);

} // namespace gasfilt
