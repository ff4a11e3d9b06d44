#include <doctest.h>

#include <cmath>

#include "gasfilt/models.hpp"
#include "gasfilt/phase.hpp"
#include "gasfilt/quadrature.hpp"
#include "gasfilt/thermo.hpp"
#include "oracles.hpp"

using namespace gasfilt;

TEST_CASE("spinodal_T closed forms and the numeric fallback") {
    const GasModel vdw = vdw_reduced(3);
    CHECK(spinodal_T(vdw, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spinodal_T(vdw, 2.0) == doctest::Approx(25.0 / 32.0).epsilon(1e-14));

    const GasModel pr = pr_reduced(3);
    CHECK(spinodal_T(pr, 3.0) == doctest::Approx(8.0 / 49.0).epsilon(1e-14));

    CHECK_THROWS_AS(spinodal_T(ideal_gas(3), 1.0), NoRootError);

    // the generic bisection path agrees with the closed form
    GasModel generic = vdw_reduced(3);
    generic.kind = ModelKind::Custom;
    for (double v : {0.8, 1.4, 3.0})
        CHECK(spinodal_T(generic, v) ==
              doctest::Approx(spinodal_T(vdw, v)).epsilon(1e-10));

    // sampled curve points satisfy phi_vv = 0 within the boundary band
    for (const SpinodalPoint& pt : spinodal_curve(vdw, {0.6, 1.0, 2.5}))
        CHECK(std::fabs(vdw.phi_vv(pt.T, pt.v)) <= 1e-12);
}

TEST_CASE("critical point") {
    SUBCASE("vdW lands on (1, 1, 1)") {
        const CriticalPoint cp = critical_point(vdw_reduced(3));
        CHECK(std::fabs(cp.T - 1.0) <= 1e-8);
        CHECK(std::fabs(cp.v - 1.0) <= 1e-8);
        CHECK(std::fabs(cp.p - 1.0) <= 1e-8);
    }
    SUBCASE("PR matches the independently computed maximum") {
        // golden-section + cubic-root cross-check fixture
        const CriticalPoint cp = critical_point(pr_reduced(3));
        CHECK(std::fabs(cp.v - 3.9513730355914414) <= 1e-7);
        CHECK(std::fabs(cp.T - 0.1701444200703503) <= 1e-10);
        CHECK(std::fabs(cp.p - 0.013236567878127214) <= 1e-10);
    }
    SUBCASE("the spinodal gradient vanishes at the maximum") {
        for (const GasModel& m : {vdw_reduced(3), pr_reduced(3)}) {
            const CriticalPoint cp = critical_point(m);
            const double h = 1e-5 * cp.v;
            const double grad =
                (spinodal_T(m, cp.v + h) - spinodal_T(m, cp.v - h)) / (2 * h);
            CHECK(std::fabs(grad) <= 1e-8);
        }
    }
    SUBCASE("no spinodal, no critical point") {
        CHECK_THROWS_AS(critical_point(ideal_gas(3)), NoRootError);
    }
}

TEST_CASE("coexistence at T = 0.9 against the frozen equal-area fixture") {
    const GasModel vdw = vdw_reduced(3);
    const CoexistencePoint cp = coexistence_at_T(vdw, 0.9);
    // fixture computed by the pressure-only equal-area construction
    CHECK(std::fabs(cp.v1 - 0.60340190317800295) <= 1e-8);
    CHECK(std::fabs(cp.v2 - 2.3488423762022277) <= 1e-8);
    CHECK(std::fabs(cp.p - 0.64699835187225115) <= 1e-8);

    // defining residuals
    CHECK(std::fabs(vdw.phi_v(cp.T, cp.v1) - vdw.phi_v(cp.T, cp.v2)) <= 1e-10);
    const double g1 = evaluate_state(vdw, cp.T, cp.v1).gamma;
    const double g2 = evaluate_state(vdw, cp.T, cp.v2).gamma;
    CHECK(std::fabs(g1 - g2) <= 1e-9 * std::max(1.0, std::fabs(g1)));

    // both endpoints strictly applicable
    CHECK(evaluate_state(vdw, cp.T, cp.v1).applicability == Applicability::Applicable);
    CHECK(evaluate_state(vdw, cp.T, cp.v2).applicability == Applicability::Applicable);

    // closed relation T = (v1+v2)(3v1-1)(3v2-1) / (8 v1^2 v2^2)
    const double T_rel = (cp.v1 + cp.v2) * (3 * cp.v1 - 1) * (3 * cp.v2 - 1) /
                         (8 * cp.v1 * cp.v1 * cp.v2 * cp.v2);
    CHECK(std::fabs(T_rel - cp.T) <= 1e-8 * cp.T);

    // closed relation on the volumes alone
    const double lhs = (3 * cp.v1 - 1) * (3 * cp.v2 - 1) * (cp.v1 + cp.v2) /
                       (cp.v1 - cp.v2) *
                       std::log((3 * cp.v2 - 1) / (3 * cp.v1 - 1));
    const double rhs = 3 * (cp.v1 + cp.v2 - 6 * cp.v1 * cp.v2);
    CHECK(std::fabs(lhs - rhs) <= 1e-8 * std::fabs(rhs));
}

TEST_CASE("solver vs equal-area and scan oracles on a temperature sweep") {
    const GasModel vdw = vdw_reduced(3);
    auto gibbs = [&](double T, double v) { return evaluate_state(vdw, T, v).gamma; };
    for (int i = 0; i < 10; ++i) {
        const double T = 0.85 + 0.014 * i; // [0.85, 0.976]
        CAPTURE(T);
        const CoexistencePoint cp = coexistence_at_T(vdw, T);
        const auto ea = oracles::vdw_equal_area(T);
        CHECK(std::fabs(cp.v1 - ea.v1) <= 1e-6);
        CHECK(std::fabs(cp.v2 - ea.v2) <= 1e-6);
        const auto sc = oracles::vdw_scan_refine(T, gibbs);
        CHECK(std::fabs(cp.v1 - sc.v1) <= 1e-6);
        CHECK(std::fabs(cp.v2 - sc.v2) <= 1e-6);
    }
}

TEST_CASE("maxwell equal-area invariant of solved points") {
    const GasModel vdw = vdw_reduced(3);
    for (double T : {0.86, 0.9, 0.95, 0.98}) {
        const CoexistencePoint cp = coexistence_at_T(vdw, T);
        const double area = integrate_adaptive(
            [&](double v) { return evaluate_state(vdw, T, v).p; }, cp.v1, cp.v2,
            1e-13, 1e-12);
        const double rect = cp.p * (cp.v2 - cp.v1);
        CHECK(std::fabs(area - rect) <= 1e-8 * std::fabs(rect));
    }
}

TEST_CASE("spinodal volumes lie strictly inside the coexistence pair") {
    const GasModel vdw = vdw_reduced(3);
    for (double T : {0.85, 0.92, 0.99}) {
        const auto [v_left, v_right] = spinodal_volumes(vdw, T);
        const CoexistencePoint cp = coexistence_at_T(vdw, T);
        CHECK(cp.v1 < v_left);
        CHECK(v_left < v_right);
        CHECK(v_right < cp.v2);
    }
}

TEST_CASE("binodal curve continuation") {
    const GasModel vdw = vdw_reduced(3);
    std::vector<double> grid;
    for (int i = 0; i < 15; ++i) grid.push_back(0.99 - 0.01 * i);
    const auto curve = binodal_curve(vdw, grid);
    REQUIRE(curve.size() == grid.size());
    for (std::size_t i = 1; i < curve.size(); ++i) {
        // descending grid: v1 shrinks, v2 grows, p shrinks
        CHECK(curve[i].v1 < curve[i - 1].v1);
        CHECK(curve[i].v2 > curve[i - 1].v2);
        CHECK(curve[i].p < curve[i - 1].p);
        CHECK(curve[i].dQ > 0.0);
        CHECK(curve[i].v2 - curve[i].v1 > 0.0);
    }
    // both volumes collapse onto the critical point as T -> 1
    const CoexistencePoint tip = coexistence_at_T(vdw, 0.9999);
    CHECK(std::fabs(tip.v1 - 1.0) < 0.05);
    CHECK(std::fabs(tip.v2 - 1.0) < 0.05);

    CHECK_THROWS_AS(coexistence_at_T(vdw, 1.0), SupercriticalError);
    CHECK_THROWS_AS(binodal_curve(vdw, {0.9, 1.01}), SupercriticalError);
}

TEST_CASE("newton core is symmetric under swapping the unknowns") {
    const GasModel vdw = vdw_reduced(3);
    const double T = 0.9;
    const auto [v1, v2] = detail::coexistence_newton(vdw, T, 0.6, 2.3);
    const auto [w1, w2] = detail::coexistence_newton(vdw, T, 2.3, 0.6);
    CHECK(v1 == doctest::Approx(w2).epsilon(1e-10));
    CHECK(v2 == doctest::Approx(w1).epsilon(1e-10));
}

TEST_CASE("transition jumps") {
    const GasModel vdw = vdw_reduced(3);
    const CoexistencePoint cp = coexistence_at_T(vdw, 0.9);
    const Jumps j = transition_jumps(vdw, cp);
    CHECK(j.dQ > 0.0);
    CHECK(j.dW < 0.0);
    // dEps = dQ + dW holds algebraically
    CHECK(std::fabs(j.dEps - (j.dQ + j.dW)) <= 1e-12 * std::fabs(j.dEps));
    // dW = -p (v2 - v1) given the Gibbs equality
    CHECK(std::fabs(j.dW + cp.p * (cp.v2 - cp.v1)) <= 1e-9 * std::fabs(j.dW));

    // jumps vanish toward the critical point (like sqrt(1 - T))
    const Jumps j99 = transition_jumps(vdw, coexistence_at_T(vdw, 0.99));
    const Jumps j999 = transition_jumps(vdw, coexistence_at_T(vdw, 0.999));
    const Jumps jtip = transition_jumps(vdw, coexistence_at_T(vdw, 0.99995));
    CHECK(j99.dQ > j999.dQ);
    CHECK(j999.dQ > jtip.dQ);
    CHECK(std::fabs(jtip.dQ) < 0.2);
    CHECK(std::fabs(jtip.dEps) < 0.2);
}

TEST_CASE("PR coexistence satisfies the defining residuals") {
    const GasModel pr = pr_reduced(3);
    const CriticalPoint cp = critical_point(pr);
    for (double f : {0.8, 0.9, 0.95}) {
        const double T = f * cp.T;
        const CoexistencePoint pt = coexistence_at_T(pr, T);
        CHECK(pt.v1 < pt.v2);
        CHECK(std::fabs(pr.phi_v(T, pt.v1) - pr.phi_v(T, pt.v2)) <= 1e-10);
        const double g1 = evaluate_state(pr, T, pt.v1).gamma;
        const double g2 = evaluate_state(pr, T, pt.v2).gamma;
        CHECK(std::fabs(g1 - g2) <= 1e-9 * std::max(1.0, std::fabs(g1)));
        const double area = integrate_adaptive(
            [&](double v) { return evaluate_state(pr, T, v).p; }, pt.v1, pt.v2,
            1e-14, 1e-12);
        CHECK(std::fabs(area - pt.p * (pt.v2 - pt.v1)) <=
              1e-8 * std::max(1e-6, std::fabs(pt.p * (pt.v2 - pt.v1))));
    }
}
