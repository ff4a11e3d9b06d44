// Steady adiabatic filtration along one isentrope. The medium enters only
// through mu and the permeability; for isotropic media the governing field is
//
//   Q(v) = integral of c^2 k / (v^3 mu) dv  along the isentrope,
//
// harmonic in space. Q folds wherever c^2 changes sign, so its inverse is
// branch-wise; invert_q enumerates all admissible volumes for a given level.
#pragma once

#include <array>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gasfilt/isentrope.hpp"

namespace gasfilt {

struct Isotropic {
    double k = 1.0;
};

/// Constant symmetric permeability given by eigenvalues and an orthonormal
/// eigenframe (rows of `frame` are the eigenvectors).
struct HomogeneousAnisotropic {
    std::array<double, 3> eigs{1.0, 1.0, 1.0};
    std::array<std::array<double, 3>, 3> frame{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
};

struct MediumSpec {
    double mu = 1.0;
    std::variant<Isotropic, HomogeneousAnisotropic> permeability = Isotropic{};

    void validate() const;
    /// k for the isotropic case, 1 for the homogeneous anisotropic scalar q.
    double scalar_permeability() const;
};

struct SourceSpec {
    std::array<double, 3> position{0, 0, 0};
    double intensity = 0.0; ///< positive = injection, negative = sink
};

struct QBranch {
    int id = 0;
    double v_lo = 0, v_hi = 0; ///< open interval between fold points
    double q_lo = 0, q_hi = 0; ///< Q at the interval ends (ordered by v)
    bool increasing = true;

    double q_min() const { return increasing ? q_lo : q_hi; }
    double q_max() const { return increasing ? q_hi : q_lo; }
};

class QProfile {
public:
    double value(double v) const;      ///< Q(v), Q(v_ref) = 0
    double derivative(double v) const; ///< C_s k / (v^3 mu)

    std::span<const double> sample_v() const { return sample_v_; }
    std::span<const double> sample_q() const { return sample_q_; }
    std::span<const double> sample_dq() const { return sample_dq_; }
    const std::vector<QBranch>& branches() const { return branches_; }

    double v_ref() const { return sample_v_.back(); }
    double v_min() const { return sample_v_.front(); }
    const Isentrope& isentrope() const { return iso_; }
    const MediumSpec& medium() const { return medium_; }

    /// All (v, branch_id) with Q(v) = u, |Q(v) - u| <= 1e-9, ordered by v.
    /// Fold endpoints are excluded; a level outside every branch range
    /// yields an empty list.
    std::vector<std::pair<double, int>> invert(double u) const;

    /// Branch containing v, or -1 when v sits at a fold point.
    int branch_of(double v) const;

    friend QProfile build_q_profile(const Isentrope&, const MediumSpec&,
                                    std::pair<double, double>, int);

private:
    QProfile(Isentrope iso, MediumSpec medium) : iso_(std::move(iso)), medium_(medium) {}

    Isentrope iso_;
    MediumSpec medium_;
    std::vector<double> sample_v_, sample_q_, sample_dq_;
    std::vector<QBranch> branches_;
};

/// Builds Q on v_range by per-panel adaptive Gauss-Kronrod quadrature of
/// C_s k/(v^3 mu), normalized to Q = 0 at the largest sampled volume, and
/// decomposes the range into maximal monotone branches separated by the
/// refined zeros of Q'.
QProfile build_q_profile(const Isentrope& iso, const MediumSpec& medium,
                         std::pair<double, double> v_range, int samples);

/// Least power-law constant c for which the van der Waals Q is monotone:
/// (1/(4 alpha)) (1+alpha)^{1+alpha} (2-alpha)^{2-alpha}, alpha = 1 + 2/n.
double vdw_invertibility_threshold(double n);

/// Peng-Robinson analogue: (2/alpha) (v0+1)(v0-1)^{alpha+1}/(v0^2+2v0-1)^2
/// with v0 > 1 the root of (alpha-2)v^3 + 3alpha v^2 + (alpha+2)v - alpha + 4.
double pr_invertibility_threshold(double n);

inline std::vector<std::pair<double, int>> invert_q(const QProfile& profile, double u) {
    return profile.invert(u);
}

struct FieldSample {
    double v = 0, T = 0;
    int branch_id = 0;
};

/// Point-source evaluation v(x) = Q^{-1}(I/(4 pi |x-a|)); multivalued.
std::vector<FieldSample> point_source_field(const QProfile& profile,
                                            const SourceSpec& src,
                                            const std::array<double, 3>& x);

/// Coordinates in which the homogeneous anisotropic problem becomes the
/// Laplace equation: components along the eigenframe scaled by 1/sqrt(k_i).
std::array<double, 3> anisotropic_to_isotropic(const HomogeneousAnisotropic& k,
                                               const std::array<double, 3>& x);
std::array<double, 3> isotropic_to_anisotropic(const HomogeneousAnisotropic& k,
                                               const std::array<double, 3>& y);

} // namespace gasfilt
