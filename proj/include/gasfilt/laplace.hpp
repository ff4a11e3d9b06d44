// Dirichlet problem for the harmonic field u in a box: point-source kernels
// I/(4 pi |x-a|) handled analytically plus a finite-difference harmonic
// correction u0 solved on a uniform 7-point grid.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "gasfilt/filtration.hpp"

namespace gasfilt {

using Point = std::array<double, 3>;
using BoundaryFn = std::function<double(const Point&)>;

struct BoxDomain {
    Point lower{0, 0, 0};
    Point upper{1, 1, 1};
    std::array<int, 3> resolution{16, 16, 16}; ///< interior nodes per axis

    void validate() const;
    double spacing(int axis) const {
        return (upper[axis] - lower[axis]) / (resolution[axis] + 1);
    }
    /// Node coordinate, index 0 .. resolution+1 (0 and resolution+1 on the boundary).
    double coord(int axis, int i) const { return lower[axis] + i * spacing(axis); }
    bool contains(const Point& x) const {
        for (int d = 0; d < 3; ++d)
            if (x[d] < lower[d] || x[d] > upper[d]) return false;
        return true;
    }
};

/// Scalar field on the full node grid of a box (boundary included).
class GridField {
public:
    GridField() = default;
    explicit GridField(const BoxDomain& box);

    const BoxDomain& box() const { return box_; }
    double& at(int i, int j, int k) { return values_[index(i, j, k)]; }
    double at(int i, int j, int k) const { return values_[index(i, j, k)]; }
    const std::vector<double>& values() const { return values_; }

    /// Trilinear interpolation; x must lie in the box.
    double interpolate(const Point& x) const;

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * (box_.resolution[1] + 2) + j) *
                   (box_.resolution[0] + 2) +
               i;
    }
    BoxDomain box_;
    std::vector<double> values_;
};

struct SolveStats {
    double relative_residual = 0.0;
    int iterations = 0;
};

/// Solves the 7-point discrete Laplace equation with Dirichlet data by
/// conjugate gradients (deterministic, single-threaded), to a relative
/// residual of tol. Throws ConvergenceError with the residual history once
/// the iteration cap is hit.
GridField solve_u0(const BoxDomain& box, const BoundaryFn& boundary_values,
                   double tol = 1e-10, int max_iter = 100000,
                   SolveStats* stats = nullptr);

class HarmonicField {
public:
    HarmonicField(std::vector<SourceSpec> sources, GridField u0, double residual)
        : sources_(std::move(sources)), u0_(std::move(u0)), residual_(residual) {}

    /// u(x) = sum_i I_i/(4 pi |x - a_i|) + u0(x).
    double value(const Point& x) const;

    const std::vector<SourceSpec>& sources() const { return sources_; }
    const GridField& u0() const { return u0_; }
    double residual() const { return residual_; }
    const BoxDomain& box() const { return u0_.box(); }

private:
    std::vector<SourceSpec> sources_;
    GridField u0_;
    double residual_;
};

/// Builds the composite field for boundary volumes v0: u0 carries the
/// boundary data Q(v0(x)) minus the source sum. All boundary volumes must
/// fall inside one branch of the profile; otherwise BranchAmbiguityError.
HarmonicField assemble_dirichlet_field(const BoxDomain& box, const QProfile& profile,
                                       const std::vector<SourceSpec>& sources,
                                       const BoundaryFn& v0_boundary);

/// u(x) inverted through the profile, with the isentrope temperature attached.
std::vector<FieldSample> field_value(const HarmonicField& hf, const QProfile& profile,
                                     const Point& x);

} // namespace gasfilt
