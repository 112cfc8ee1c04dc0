#include "tang/bounds.hpp"
#include "tang/errors.hpp"
#include "tang/shapes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tang;

namespace {

constexpr double kPi = std::numbers::pi;

bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

double sigma_inf_closed_isosceles(double A, double sg) {
    const double num = std::pow(1.0 - sg, 6) + 12.0 * sg * sg * std::pow(1.0 - sg, 2) +
                       16.0 * sg * sg * sg;
    return (A * A / 48.0) * num / (sg * (1.0 - sg) * std::pow(1.0 + sg, 3));
}

double sigma_one_closed_isosceles(double A, double L, double sg) {
    const double p1 = std::pow(1.0 - sg, 12) + 9.0 * sg * std::pow(1.0 - sg, 10) -
                      40.0 * std::pow(sg, 3) * std::pow(1.0 - sg, 6) +
                      144.0 * std::pow(sg, 5) * std::pow(1.0 - sg, 2) + 256.0 * std::pow(sg, 6);
    return -(1.0 / 360.0) * (A * A * A / L) * p1 / std::pow(sg * (1.0 - sg) * (1.0 + sg), 3);
}

} // namespace

TEST_CASE("regular_ngon closed forms") {
    SUBCASE("n = 4, area pi (published row)") {
        const auto poly = regular_ngon(4, Normalization::area(kPi));
        const auto rep = functionals(poly);
        const auto sig = sigma_functionals(rep, poly.rho());
        CHECK(std::fabs(rep.L - 7.0898) < 5e-5);
        CHECK(rel_close(rep.L, 4.0 * std::sqrt(kPi), 1e-12));
        CHECK(rel_close(sig.sigma_inf, kPi * kPi / 24.0, 1e-12));
        CHECK(rel_close(-sig.sigma_one, std::pow(kPi, 2.5) / 720.0, 1e-12));
    }
    SUBCASE("n = 3, circumradius 1") {
        const auto poly = regular_ngon(3, Normalization::circumradius(1.0));
        const auto rep = functionals(poly);
        const auto sig = sigma_functionals(rep, poly.rho());
        CHECK(rel_close(poly.rho(), 0.5, 1e-12));
        CHECK(rel_close(rep.A, 3.0 * std::sqrt(3.0) / 4.0, 1e-12));
        CHECK(rel_close(sig.sigma_inf, 3.0 * std::sqrt(3.0) / 64.0, 1e-12));
    }
    SUBCASE("n = 12, area pi (published row)") {
        const auto poly = regular_ngon(12, Normalization::area(kPi));
        const auto sig = sigma_functionals(functionals(poly), poly.rho());
        CHECK(std::fabs(sig.sigma_inf - 0.39287) < 5e-5);
        CHECK(std::fabs(-sig.sigma_one - 0.0001738) < 5e-5);
    }
    SUBCASE("generic functionals match the n-gon closed forms") {
        for (int n = 3; n <= 12; ++n) {
            const auto poly = regular_ngon(n, Normalization::inradius(0.83));
            const auto rep = functionals(poly);
            const double rho = poly.rho(), tau = std::tan(kPi / n);
            CHECK(rel_close(rep.L, 2.0 * n * rho * tau, 1e-12));
            CHECK(rel_close(rep.i2, (2.0 / 3.0) * n * std::pow(rho, 3) * tau * (3.0 + tau * tau),
                            1e-12));
            CHECK(rel_close(rep.i4,
                            (2.0 / 15.0) * n * std::pow(rho, 5) * tau *
                                (15.0 + 10.0 * tau * tau + 3.0 * std::pow(tau, 4)),
                            1e-12));
        }
    }
    CHECK_THROWS_AS((void)regular_ngon(2, Normalization::inradius(1.0)), TooFewVertices);
}

TEST_CASE("isosceles closed forms") {
    SUBCASE("sigma = 2 - sqrt3 is the equilateral triangle") {
        const auto poly = isosceles(2.0 - std::sqrt(3.0), std::sqrt(3.0));
        const auto rep = functionals(poly);
        const auto sig = sigma_functionals(rep, poly.rho());
        CHECK(rel_close(rep.L, 6.0, 1e-12));
        CHECK(rel_close(sig.sigma_inf, 1.0 / (4.0 * std::sqrt(3.0)), 1e-12));
    }
    SUBCASE("right isosceles at circumradius 1 (published row)") {
        const auto poly = isosceles(std::sqrt(2.0) - 1.0, Normalization::circumradius(1.0));
        const auto rep = functionals(poly);
        const auto sig = sigma_functionals(rep, poly.rho());
        CHECK(rel_close(rep.A, 1.0, 1e-12));
        CHECK(rel_close(poly.rho(), std::sqrt(2.0) - 1.0, 1e-12));
        CHECK(rel_close(rep.L, 2.0 + 2.0 * std::sqrt(2.0), 1e-12));
        CHECK(rel_close(sig.sigma_inf, (3.0 - 2.0 * std::sqrt(2.0)) / 3.0, 1e-12));
        CHECK(rel_close(-sig.sigma_one, (131.0 - 91.0 * std::sqrt(2.0)) / 90.0, 1e-12));
    }
    SUBCASE("closed-form Sigma curves match the generic route on a sigma sweep") {
        for (int k = 1; k <= 40; ++k) {
            const double sg = k / 41.0;
            const auto poly = isosceles(sg, 2.31);
            const auto rep = functionals(poly);
            const auto sig = sigma_functionals(rep, poly.rho());
            CHECK(rel_close(sig.sigma_inf, sigma_inf_closed_isosceles(rep.A, sg), 1e-12));
            CHECK(rel_close(sig.sigma_one, sigma_one_closed_isosceles(rep.A, rep.L, sg), 1e-12));
            CHECK(rel_close(rep.L, rep.A * std::pow(1.0 + sg, 4) /
                                       (rep.A * (1.0 - sg * sg) / (2.0 * sg) * 2.0 * sg / 1.0) *
                                       1.0 / (1.0 + sg) / (1.0 - sg) * 1.0,
                            1e-9)); // L = a(1+sg)^2/sg with A = a^2 (1-sg^2)/(2 sg)
        }
    }
    CHECK_THROWS_AS((void)isosceles(1.2, 1.0), ParameterOutOfRange);
    CHECK_THROWS_AS((void)isosceles(0.0, 1.0), ParameterOutOfRange);
}

TEST_CASE("rhombus closed forms") {
    SUBCASE("tau = 1 is the square of side 2 rho") {
        const auto poly = rhombus(1.0, Normalization::inradius(1.0));
        const auto rep = functionals(poly);
        CHECK(rel_close(rep.L, 8.0, 1e-12));
        CHECK(rel_close(rep.i2, 32.0 / 3.0, 1e-12));
    }
    SUBCASE("tau = 2, rho = 1") {
        const auto poly = rhombus(2.0, Normalization::inradius(1.0));
        const auto rep = functionals(poly);
        CHECK(rel_close(rep.L, 10.0, 1e-12));
        // i2 = (4/3) rho^3 (tau + 1/tau)^3; the eq-by-sides route gives the same
        CHECK(rel_close(rep.i2, 125.0 / 6.0, 1e-12));
        const double by_eta = 1.0 * rep.L + (4.0 / 3.0) * (8.0 + 0.125); // rho^2 i0 + sum eta^3/3
        CHECK(rel_close(rep.i2, by_eta, 1e-12));
        const double cube = (4.0 / 3.0) * std::pow(2.0 + 0.5, 3);
        CHECK(rel_close(rep.i2, cube, 1e-12));
        const double i4_closed = 4.0 * 2.5 + (8.0 / 3.0) * (8.0 + 1.0 / 8.0) +
                                 (4.0 / 5.0) * (32.0 + 1.0 / 32.0);
        CHECK(rel_close(rep.i4, i4_closed, 1e-12));
    }
    SUBCASE("tau and 1/tau give the identical report") {
        const auto a = functionals(rhombus(3.7, Normalization::inradius(1.0)));
        const auto b = functionals(rhombus(1.0 / 3.7, Normalization::inradius(1.0)));
        CHECK(a.L == b.L);
        CHECK(a.i2 == b.i2);
        CHECK(a.i4 == b.i4);
        CHECK(a.d_O == b.d_O);
    }
    CHECK_THROWS_AS((void)rhombus(-1.0, Normalization::inradius(1.0)), ParameterOutOfRange);
}

TEST_CASE("kite construction") {
    // right kite: apex pi/3, repeated angle pi/2
    const auto poly = kite(kPi / 3.0, kPi / 2.0, Normalization::inradius(1.0));
    const auto a = poly.angles();
    CHECK(rel_close(a[0], kPi / 3.0, 1e-12));
    CHECK(rel_close(a[1], kPi / 2.0, 1e-12));
    CHECK(rel_close(a[2], 2.0 * kPi - kPi / 3.0 - kPi, 1e-12));
    CHECK(rel_close(a[3], kPi / 2.0, 1e-12));
}

TEST_CASE("disk closed forms") {
    const auto rep = disk_functionals(2.0);
    CHECK(rel_close(rep.L, 4.0 * kPi, 1e-15));
    CHECK(rel_close(rep.A, 4.0 * kPi, 1e-15));
    CHECK(rel_close(rep.i2, 16.0 * kPi, 1e-15));
    CHECK(rel_close(rep.i4, 64.0 * kPi, 1e-15));
    CHECK(rel_close(rep.I2, 8.0 * kPi, 1e-15));
    CHECK(rep.d_O == 2.0);
}

TEST_CASE("cap curve endpoints") {
    CHECK(std::fabs(cap_curve_x(CurveKind::one_cap, 1.0) - 2.0 * kPi) < 1e-9);
    CHECK(std::fabs(cap_curve_x(CurveKind::one_cap, 1e-12) - 2.0) < 1e-9);
    CHECK(std::fabs(cap_curve_x(CurveKind::one_cap, 0.5) - (2.0 * kPi / 3.0 + std::sqrt(3.0))) <
          1e-9);
    CHECK(std::fabs(cap_curve_x(CurveKind::two_cap_lower, 1.0) - 2.0 * kPi) < 1e-9);
    CHECK(std::fabs(cap_curve_x(CurveKind::two_cap_lower, 1e-12) - 4.0) < 1e-9);
    CHECK(std::fabs(cap_curve_x(CurveKind::bcs03_upper, 1e-12) - 4.0) < 1e-9);
    const auto rows = cap_curve(CurveKind::one_cap, 64);
    CHECK(rows.size() == 64);
    CHECK(rows.back().y == 1.0);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].y > rows[i - 1].y);
    CHECK_THROWS_AS((void)cap_curve(CurveKind::one_cap, 1), ParameterOutOfRange);
}

TEST_CASE("blundon curves") {
    const auto [xl, xu] = blundon_x(0.5);
    CHECK(std::fabs(xl - 3.0 * std::sqrt(3.0)) < 1e-9);
    CHECK(std::fabs(xu - 3.0 * std::sqrt(3.0)) < 1e-9);
    const auto [xl0, xu0] = blundon_x(1e-12);
    CHECK(std::fabs(xl0) < 1e-5); // x ~ sqrt(32 y) -> 0
    CHECK(std::fabs(xu0 - 4.0) < 1e-9);
    const auto [lo, hi] = blundon_curves(32);
    CHECK(lo.size() == 32);
    CHECK(hi.size() == 32);
    CHECK(lo.back().y == 0.5);
    for (const auto& s : lo) CHECK(s.axes == "L_over_RV");
}

TEST_CASE("bicentric quadrilateral envelope") {
    const auto [xm, xp] = bicentric_quad_x(1.0);
    CHECK(std::fabs(xm - 4.0 * std::sqrt(2.0)) < 1e-9);
    CHECK(std::fabs(xp - 4.0 * std::sqrt(2.0)) < 1e-9);
    // thin limits: L-/d_O -> 2 and L+/d_O -> 4
    const auto [xm_inf, xp_inf] = bicentric_quad_x(1e9);
    CHECK(std::fabs(xm_inf - 2.0) < 1e-6);
    CHECK(std::fabs(xp_inf - 4.0) < 1e-6);
    const auto [lo, hi] = bicentric_quad_envelope(16);
    CHECK(lo.front().x == doctest::Approx(4.0 * std::sqrt(2.0)));
    CHECK(hi.front().y == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("sample_random determinism and validity") {
    const auto a = sample_random(6, 50, 424242, Normalization::inradius(1.0));
    const auto b = sample_random(6, 50, 424242, Normalization::inradius(1.0));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rho() == b[i].rho());
        for (std::size_t k = 0; k < 6; ++k) CHECK(a[i].t_values()[k] == b[i].t_values()[k]);
    }
    const auto c = sample_random(6, 50, 424243, Normalization::inradius(1.0));
    bool same = true;
    for (std::size_t k = 0; k < 6; ++k) same = same && a[0].t_values()[k] == c[0].t_values()[k];
    CHECK_FALSE(same);

    SUBCASE("heavy-tail concentration produces thin shapes more often") {
        const auto heavy = sample_random(4, 200, 7, Normalization::inradius(1.0), 0.2);
        const auto flat = sample_random(4, 200, 7, Normalization::inradius(1.0), 1.0);
        double max_heavy = 0, max_flat = 0;
        for (const auto& p : heavy)
            for (double t : p.t_values()) max_heavy = std::max(max_heavy, t);
        for (const auto& p : flat)
            for (double t : p.t_values()) max_flat = std::max(max_flat, t);
        CHECK(max_heavy > max_flat);
    }
}

TEST_CASE("Jensen minimality: the regular n-gon minimizes L, i2, i4 at fixed rho") {
    for (int n = 3; n <= 8; ++n) {
        const auto reg = functionals(regular_ngon(n, Normalization::inradius(1.0)));
        const auto polys = sample_random(n, 10000, 90000 + n, Normalization::inradius(1.0));
        int violations = 0;
        for (const auto& poly : polys) {
            const auto rep = functionals(poly);
            if (rep.L < reg.L || rep.i2 < reg.i2 || rep.i4 < reg.i4) ++violations;
        }
        CHECK(violations == 0);
    }
    // spec spot value: no hexagon sample beats L/rho = 4 sqrt 3
    const auto reg6 = functionals(regular_ngon(6, Normalization::inradius(1.0)));
    CHECK(rel_close(reg6.L, 4.0 * std::sqrt(3.0), 1e-12));
}

TEST_CASE("Hadwiger sharpened isoperimetric inequality on samples") {
    for (int n : {3, 4, 5, 6, 8, 12}) {
        const auto polys = sample_random(n, 2000, 1234 + n, Normalization::inradius(1.0));
        for (const auto& poly : polys) {
            const auto rep = functionals(poly);
            const double x = rep.L / rep.d_O;
            const double y = poly.rho() / rep.d_O;
            CHECK(x * (x - 2.0 * kPi * y) >=
                  (kPi * kPi / 4.0) * (1.0 - y) * (1.0 - y) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("isosceles extremality: equilateral minimizes L, i2, Sigma_inf at fixed area") {
    const double A = std::sqrt(3.0);
    const double sg_star = 2.0 - std::sqrt(3.0);
    const auto best = functionals(isosceles(sg_star, A));
    const auto sig_best = sigma_functionals(best, 2.0 * A / best.L);
    for (int k = 1; k <= 200; ++k) {
        const double sg = k / 201.0;
        const auto rep = functionals(isosceles(sg, A));
        const auto sig = sigma_functionals(rep, 2.0 * rep.A / rep.L);
        CHECK(rep.L >= best.L * (1.0 - 1e-12));
        CHECK(rep.i2 >= best.i2 * (1.0 - 1e-12));
        CHECK(sig.sigma_inf >= sig_best.sigma_inf * (1.0 - 1e-12));
    }
}

TEST_CASE("rhombus extremality: square minimizes L, i2, i4, d_O at fixed rho") {
    const auto best = functionals(rhombus(1.0, Normalization::inradius(1.0)));
    for (int k = 0; k <= 200; ++k) {
        const double tau = 0.1 + 3.0 * k / 200.0;
        const auto rep = functionals(rhombus(tau, Normalization::inradius(1.0)));
        CHECK(rep.L >= best.L * (1.0 - 1e-12));
        CHECK(rep.i2 >= best.i2 * (1.0 - 1e-12));
        CHECK(rep.i4 >= best.i4 * (1.0 - 1e-12));
        CHECK(rep.d_O >= best.d_O * (1.0 - 1e-12));
    }
}
