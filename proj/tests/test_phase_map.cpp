#include <doctest.h>

#include <cmath>
#include <random>

#include "gasfilt/models.hpp"
#include "gasfilt/phase_map.hpp"

using namespace gasfilt;

namespace {

struct VdwSetup {
    GasModel model = vdw_reduced(3);
    CriticalPoint crit;
    BinodalTable table;

    static std::vector<double> T_grid(int steps, double lo, double hi) {
        std::vector<double> g;
        for (int i = 0; i < steps; ++i)
            g.push_back(lo + (hi - lo) * i / (steps - 1));
        return g;
    }

    explicit VdwSetup(int steps = 24)
        : crit(critical_point(model)),
          table(binodal_curve(model, T_grid(steps, 0.58, 0.995)), crit) {}
};

} // namespace

TEST_CASE("classification against the binodal") {
    VdwSetup s;

    SUBCASE("supercritical above T*") {
        CHECK(classify(s.table, 1.0, 1.1).phase == Phase::Supercritical);
        CHECK(classify(s.table, 50.0, 1.0001).phase == Phase::Supercritical);
    }
    SUBCASE("the three subcritical bands at T = 0.9") {
        // binodal fixture at T = 0.9: v1 = 0.60340, v2 = 2.34884
        CHECK(classify(s.table, 1.0, 0.9).phase == Phase::Intermediate);
        CHECK(classify(s.table, 5.0, 0.9).phase == Phase::Gas);
        CHECK(classify(s.table, 0.45, 0.9).phase == Phase::Liquid);
    }
    SUBCASE("interpolated boundaries are close to the solved ones") {
        const CoexistencePoint cp = coexistence_at_T(s.model, 0.9);
        CHECK(std::fabs(s.table.v1_at(0.9) - cp.v1) <= 2e-4);
        CHECK(std::fabs(s.table.v2_at(0.9) - cp.v2) <= 2e-3);
    }
    SUBCASE("ties go to Intermediate") {
        const double v2 = s.table.v2_at(0.9);
        CHECK(classify(s.table, v2, 0.9).phase == Phase::Intermediate);
        CHECK(classify(s.table, v2 + 5e-10, 0.9).phase == Phase::Intermediate);
        CHECK(classify(s.table, v2 + 1e-6, 0.9).phase == Phase::Gas);
    }
    SUBCASE("below the table throws") {
        CHECK_THROWS_AS(classify(s.table, 1.0, 0.5), ExtrapolationError);
    }
}

TEST_CASE("labels are stable under refining the binodal table") {
    VdwSetup coarse(24);
    VdwSetup fine(48);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uT(0.6, 0.99), uv(0.4, 6.0);
    int agreements = 0, total = 0;
    for (int i = 0; i < 500; ++i) {
        const double T = uT(rng), v = uv(rng);
        const Phase a = classify(coarse.table, v, T).phase;
        const Phase b = classify(fine.table, v, T).phase;
        // disagreement is only allowed within 1e-6 of an interface
        if (a != b) {
            const double d1 = std::fabs(v - fine.table.v1_at(T));
            const double d2 = std::fabs(v - fine.table.v2_at(T));
            CHECK(std::min(d1, d2) <= 2e-3); // interpolation shift near boundary
        } else {
            ++agreements;
        }
        ++total;
    }
    CHECK(agreements >= total - 5);
}

namespace {

struct PipelineSetup {
    GasModel model = vdw_reduced(3);
    Isentrope iso;
    QProfile prof;
    VdwSetup binodal;
    BoxDomain box;

    PipelineSetup()
        : iso(make_isentrope(model, sigma0_from_power_constant(model, 3.0))),
          prof(build_q_profile(iso, MediumSpec{}, {0.9, 6.0}, 512)) {
        box.lower = {-1, -1, -1};
        box.upper = {1, 1, 1};
        box.resolution = {16, 16, 16};
    }
};

} // namespace

TEST_CASE("uniform gas phase without sources") {
    PipelineSetup s;
    const double v0 = 2.2; // gas at T(v0) ~ 0.951
    const HarmonicField hf = assemble_dirichlet_field(
        s.box, s.prof, {}, [&](const Point&) { return v0; });
    const PhaseMapResult res = map_field(hf, s.prof, s.binodal.table, {6, 6, 6});
    REQUIRE(res.points.size() == 216);
    for (const auto& pt : res.points) {
        REQUIRE(pt.labels.size() == 1);
        CHECK(pt.labels[0].phase == Phase::Gas);
    }
    CHECK(res.interfaces.empty());
}

TEST_CASE("single source produces a closed intermediate region") {
    PipelineSetup s;
    SourceSpec src;
    src.position = {0, 0, 0};
    src.intensity = 0.113184;
    const HarmonicField hf = assemble_dirichlet_field(
        s.box, s.prof, {src}, [](const Point&) { return 2.2; });
    const PhaseMapResult res = map_field(hf, s.prof, s.binodal.table, {13, 13, 13});

    // the sample grid has a node at the source: it carries no labels
    std::size_t empty = 0, gas = 0, intermediate = 0;
    for (const auto& pt : res.points) {
        if (pt.labels.empty()) {
            ++empty;
            continue;
        }
        REQUIRE(pt.labels.size() == 1);
        if (pt.labels[0].phase == Phase::Gas) ++gas;
        if (pt.labels[0].phase == Phase::Intermediate) ++intermediate;
    }
    CHECK(gas > 0);
    CHECK(intermediate > 0);
    CHECK(gas + intermediate + empty == res.points.size());
    CHECK_FALSE(res.interfaces.empty());

    // interface radius along each axis direction, against a bisection on the
    // continuous field
    const double r0 = interface_radius(hf, s.prof, s.binodal.table, src,
                                       {1, 0, 0}, 0.08, 0.9);
    for (const Point& dir : {Point{-1, 0, 0}, Point{0, 1, 0}, Point{0, 0, -1}}) {
        const double r = interface_radius(hf, s.prof, s.binodal.table, src, dir,
                                          0.08, 0.9);
        CHECK(std::fabs(r - r0) <= 0.02 * r0); // nearly spherical
    }
    // labels flip from Intermediate (inside) to Gas (outside) across r0
    auto phase_at = [&](double r) {
        const auto f = field_value(hf, s.prof, {r, 0, 0});
        REQUIRE(f.size() == 1);
        return classify(s.binodal.table, f[0].v, f[0].T).phase;
    };
    CHECK(phase_at(r0 * 0.97) == Phase::Intermediate);
    CHECK(phase_at(r0 * 1.03) == Phase::Gas);

    CHECK_THROWS_AS(interface_radius(hf, s.prof, s.binodal.table, src, {1, 0, 0},
                                     0.5, 0.9),
                    NoRootError);
}

TEST_CASE("monotone label sequence along rays for an invertible profile") {
    PipelineSetup s;
    SourceSpec src;
    src.position = {0, 0, 0};
    src.intensity = 0.113184;
    const HarmonicField hf = assemble_dirichlet_field(
        s.box, s.prof, {src}, [](const Point&) { return 2.2; });
    for (const Point& dir : {Point{1, 0, 0}, Point{1, 1, 0}, Point{1, 1, 1}}) {
        const double norm =
            std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        int transitions = 0;
        int prev = -1;
        for (double r = 0.06; r <= 0.98; r += 0.02) {
            const Point x{dir[0] / norm * r, dir[1] / norm * r, dir[2] / norm * r};
            const auto f = field_value(hf, s.prof, x);
            if (f.empty()) continue; // beyond the sampled volume range near r=0
            const int phase =
                static_cast<int>(classify(s.binodal.table, f[0].v, f[0].T).phase);
            if (prev >= 0 && phase != prev) ++transitions;
            prev = phase;
        }
        CHECK(transitions == 1); // Intermediate -> Gas once, no oscillation
    }
}

TEST_CASE("folded profile: multivalued temperatures and branch labels") {
    const GasModel model = vdw_reduced(3);
    const double cstar = 64.0 / 45.0;
    const Isentrope iso =
        make_isentrope(model, sigma0_from_power_constant(model, 0.8 * cstar));
    const QProfile prof = build_q_profile(iso, MediumSpec{}, {0.5, 25.0}, 2048);
    REQUIRE(prof.branches().size() == 3);

    // the fold branches run to low temperature, so the lookup table has to
    // reach well below the near-critical range
    std::vector<double> grid;
    for (double T = 0.07; T < 0.56; T *= 1.25) grid.push_back(T);
    for (double T = 0.58; T < 0.996; T += 0.02) grid.push_back(T);
    const BinodalTable table(binodal_curve(model, grid), critical_point(model));

    // a level in the triple-valued window: three volumes, one temperature each
    const auto& b = prof.branches();
    const double u_lo = std::max(b[0].q_min(), b[2].q_min());
    const double u_hi = std::min(b[0].q_max(), std::min(b[1].q_max(), b[2].q_max()));
    const double u = u_lo + 0.3 * (u_hi - u_lo);
    const auto sols = prof.invert(u);
    REQUIRE(sols.size() == 3);
    std::vector<double> temps;
    std::vector<Phase> phases;
    for (const auto& [v, id] : sols) {
        const double T = iso.temperature(v);
        temps.push_back(T);
        phases.push_back(classify(table, v, T).phase);
    }
    // temperature is genuinely multivalued, decreasing along the volume order
    CHECK(temps[0] > temps[1]);
    CHECK(temps[1] > temps[2]);
    CHECK(temps[0] > 2.0 * temps[2]);
    // all three states sit inside the dome: the fold volumes stay between the
    // coexistence boundaries at their temperatures (supersaturated states)
    for (Phase p : phases) CHECK(p == Phase::Intermediate);

    // liquid shows up on the first branch at deeper levels: v = 0.75 has
    // T ~ 0.98 and lies left of the liquid boundary v1(T) ~ 0.79
    const auto deep = prof.invert(prof.value(0.75));
    REQUIRE(deep.size() == 1);
    CHECK(deep[0].second == 0);
    CHECK(classify(table, deep[0].first, iso.temperature(deep[0].first)).phase ==
          Phase::Liquid);

    // and the shallow end of branch 0 is supercritical (small v, high T)
    CHECK(classify(table, 0.55, iso.temperature(0.55)).phase ==
          Phase::Supercritical);
}
