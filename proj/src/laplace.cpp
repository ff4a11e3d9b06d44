#include "gasfilt/laplace.hpp"

#include <algorithm>
#include <cmath>

namespace gasfilt {

namespace {

constexpr double kPi = 3.14159265358979323846;

double kernel_sum(const std::vector<SourceSpec>& sources, const Point& x) {
    double u = 0.0;
    for (const auto& s : sources) {
        const double dx = x[0] - s.position[0];
        const double dy = x[1] - s.position[1];
        const double dz = x[2] - s.position[2];
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (!(r > 0.0))
            throw SingularPointError("harmonic field evaluated at a source");
        u += s.intensity / (4.0 * kPi * r);
    }
    return u;
}

} // namespace

void BoxDomain::validate() const {
    for (int d = 0; d < 3; ++d) {
        if (!(upper[d] > lower[d]))
            throw DomainError("box: upper corner must exceed lower corner");
        if (resolution[d] < 8)
            throw DomainError("box: need at least 8 interior nodes per axis");
    }
}

GridField::GridField(const BoxDomain& box) : box_(box) {
    box_.validate();
    values_.assign(static_cast<std::size_t>(box_.resolution[0] + 2) *
                       (box_.resolution[1] + 2) * (box_.resolution[2] + 2),
                   0.0);
}

double GridField::interpolate(const Point& x) const {
    if (!box_.contains(x))
        throw DomainError("GridField::interpolate: point outside the box");
    int idx[3];
    double t[3];
    for (int d = 0; d < 3; ++d) {
        const double s = (x[d] - box_.lower[d]) / box_.spacing(d);
        int i = static_cast<int>(std::floor(s));
        i = std::clamp(i, 0, box_.resolution[d]); // cell [i, i+1]
        idx[d] = i;
        t[d] = s - i;
    }
    double acc = 0.0;
    for (int c = 0; c < 8; ++c) {
        const int di = c & 1, dj = (c >> 1) & 1, dk = (c >> 2) & 1;
        const double w = (di ? t[0] : 1.0 - t[0]) * (dj ? t[1] : 1.0 - t[1]) *
                         (dk ? t[2] : 1.0 - t[2]);
        acc += w * at(idx[0] + di, idx[1] + dj, idx[2] + dk);
    }
    return acc;
}

GridField solve_u0(const BoxDomain& box, const BoundaryFn& g, double tol,
                   int max_iter, SolveStats* stats) {
    box.validate();
    GridField field(box);
    const int nx = box.resolution[0], ny = box.resolution[1], nz = box.resolution[2];

    // boundary nodes
    for (int k = 0; k <= nz + 1; ++k)
        for (int j = 0; j <= ny + 1; ++j)
            for (int i = 0; i <= nx + 1; ++i) {
                if (i != 0 && i != nx + 1 && j != 0 && j != ny + 1 && k != 0 &&
                    k != nz + 1)
                    continue;
                const Point x{box.coord(0, i), box.coord(1, j), box.coord(2, k)};
                const double val = g(x);
                if (!std::isfinite(val))
                    throw DomainError("solve_u0: non-finite boundary value");
                field.at(i, j, k) = val;
            }

    const double cx = 1.0 / (box.spacing(0) * box.spacing(0));
    const double cy = 1.0 / (box.spacing(1) * box.spacing(1));
    const double cz = 1.0 / (box.spacing(2) * box.spacing(2));
    const double diag = 2.0 * (cx + cy + cz);
    const std::size_t n = static_cast<std::size_t>(nx) * ny * nz;

    auto lin = [&](int i, int j, int k) {
        return (static_cast<std::size_t>(k - 1) * ny + (j - 1)) * nx + (i - 1);
    };

    // right-hand side from the Dirichlet data, A = -Laplace_h on interior nodes
    std::vector<double> b(n, 0.0);
    for (int k = 1; k <= nz; ++k)
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) {
                double acc = 0.0;
                if (i == 1) acc += cx * field.at(0, j, k);
                if (i == nx) acc += cx * field.at(nx + 1, j, k);
                if (j == 1) acc += cy * field.at(i, 0, k);
                if (j == ny) acc += cy * field.at(i, ny + 1, k);
                if (k == 1) acc += cz * field.at(i, j, 0);
                if (k == nz) acc += cz * field.at(i, j, nz + 1);
                b[lin(i, j, k)] = acc;
            }

    auto apply_A = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int k = 1; k <= nz; ++k)
            for (int j = 1; j <= ny; ++j)
                for (int i = 1; i <= nx; ++i) {
                    const std::size_t c = lin(i, j, k);
                    double acc = diag * x[c];
                    if (i > 1) acc -= cx * x[c - 1];
                    if (i < nx) acc -= cx * x[c + 1];
                    if (j > 1) acc -= cy * x[c - nx];
                    if (j < ny) acc -= cy * x[c + nx];
                    if (k > 1) acc -= cz * x[c - static_cast<std::size_t>(nx) * ny];
                    if (k < nz) acc -= cz * x[c + static_cast<std::size_t>(nx) * ny];
                    y[c] = acc;
                }
    };
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b2) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b2[i];
        return s;
    };

    std::vector<double> x(n, 0.0), r = b, p = b, Ap(n);
    const double b_norm = std::sqrt(dot(b, b));
    SolveStats st;
    std::vector<double> history;
    if (b_norm == 0.0) {
        st.relative_residual = 0.0;
    } else {
        double rr = dot(r, r);
        int it = 0;
        for (; it < max_iter; ++it) {
            const double rel = std::sqrt(rr) / b_norm;
            history.push_back(rel);
            if (rel <= tol) break;
            apply_A(p, Ap);
            const double alpha = rr / dot(p, Ap);
            for (std::size_t q = 0; q < n; ++q) x[q] += alpha * p[q];
            for (std::size_t q = 0; q < n; ++q) r[q] -= alpha * Ap[q];
            const double rr_new = dot(r, r);
            const double beta = rr_new / rr;
            rr = rr_new;
            for (std::size_t q = 0; q < n; ++q) p[q] = r[q] + beta * p[q];
        }
        st.relative_residual = std::sqrt(rr) / b_norm;
        st.iterations = it;
        if (st.relative_residual > tol)
            throw ConvergenceError("solve_u0: conjugate gradients hit the iteration "
                                   "cap with relative residual " +
                                       std::to_string(st.relative_residual),
                                   history);
    }

    for (int k = 1; k <= nz; ++k)
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) field.at(i, j, k) = x[lin(i, j, k)];
    if (stats) *stats = st;
    return field;
}

double HarmonicField::value(const Point& x) const {
    return kernel_sum(sources_, x) + u0_.interpolate(x);
}

HarmonicField assemble_dirichlet_field(const BoxDomain& box, const QProfile& profile,
                                       const std::vector<SourceSpec>& sources,
                                       const BoundaryFn& v0_boundary) {
    box.validate();
    for (const auto& s : sources)
        for (int d = 0; d < 3; ++d) {
            const double h = box.spacing(d);
            if (s.position[d] < box.lower[d] + 2.0 * h ||
                s.position[d] > box.upper[d] - 2.0 * h)
                throw DomainError("assemble_dirichlet_field: source closer than 2h "
                                  "to the boundary");
        }
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
            if (sources[i].position == sources[j].position)
                throw ParamError("assemble_dirichlet_field: coincident sources");

    int branch = -2; // unset
    auto boundary_u0 = [&](const Point& x) {
        const double v0 = v0_boundary(x);
        const int b = profile.branch_of(v0);
        if (b < 0)
            throw BranchAmbiguityError(
                "assemble_dirichlet_field: boundary volume " + std::to_string(v0) +
                " is at a fold point or outside the profile");
        if (branch == -2) branch = b;
        if (b != branch)
            throw BranchAmbiguityError(
                "assemble_dirichlet_field: boundary volumes span branches " +
                std::to_string(branch) + " and " + std::to_string(b));
        return profile.value(v0) - kernel_sum(sources, x);
    };

    SolveStats st;
    GridField u0 = solve_u0(box, boundary_u0, 1e-10, 100000, &st);
    return HarmonicField(sources, std::move(u0), st.relative_residual);
}

std::vector<FieldSample> field_value(const HarmonicField& hf, const QProfile& profile,
                                     const Point& x) {
    if (!hf.box().contains(x))
        throw DomainError("field_value: point outside the box");
    const double u = hf.value(x);
    std::vector<FieldSample> out;
    for (const auto& [v, id] : profile.invert(u))
        out.push_back({v, profile.isentrope().temperature(v), id});
    return out;
}

} // namespace gasfilt
