#pragma once

#include "tang/family.hpp"
#include "tang/polygon.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tang {

/// How a family instance is scaled: to a given area, a given inradius, or a
/// given circumradius (circle through the vertices; only for families where
/// that is closed-form).
struct Normalization {
    enum class Kind { area, inradius, circumradius };
    Kind kind = Kind::inradius;
    double value = 1.0;

    static Normalization area(double a) { return {Kind::area, a}; }
    static Normalization inradius(double r) { return {Kind::inradius, r}; }
    static Normalization circumradius(double r) { return {Kind::circumradius, r}; }
};

/// One row of a Blaschke-Santalo style diagram.
struct DiagramSample {
    ShapeFamily family = ShapeFamily::random_tangential;
    int n = 0;
    double param1 = 0;
    double param2 = 0;
    double x = 0;
    double y = 0;
    std::string axes; // e.g. "L_over_dO", "L_over_RV", "L_over_R"
};

/// Regular n-gon: all T_k equal tan(pi/n).
TangentialPolygon regular_ngon(int n, const Normalization& norm);

/// Isosceles triangle parametrized by sigma = tan(apex/4) in (0,1):
/// T_A = (1-sigma^2)/(2 sigma), T_B = T_C = (1+sigma)/(1-sigma).
TangentialPolygon isosceles(double sigma, const Normalization& norm);
TangentialPolygon isosceles(double sigma, double area);

/// Rhombus with tau = tan(alpha/2) at an acute vertex: T = (1/tau, tau, ...).
/// tau and 1/tau give the same shape.
TangentialPolygon rhombus(double tau, const Normalization& norm);

/// Kite with apex angle alpha and repeated angle beta (fourth angle
/// 2 pi - alpha - 2 beta).
TangentialPolygon kite(double alpha, double beta, const Normalization& norm);

/// Closed forms for the disk of inradius rho (the n -> infinity member,
/// kept exact rather than approximated by a large n-gon):
/// L = 2 pi rho, A = pi rho^2, i_{2k} = 2 pi rho^{2k+1}, d_O = rho.
GeometricReport disk_functionals(double rho);

enum class CurveKind { one_cap, two_cap_lower, bcs03_upper };

/// x(y) value of one analytic boundary curve:
///   one_cap       x = (pi + 2 asin y) y + 2 sqrt(1-y^2),  (x, y) = (L/d_O, rho/d_O)
///   two_cap_lower x = 4 (sqrt(1-y^2) + y asin y),          (x, y) = (L/R, rho/R)
///   bcs03_upper   x = 4 (sqrt(1-y^2) + asin y)
double cap_curve_x(CurveKind kind, double y);

/// Samples the curve on the monotone grid y_i = i/samples, i = 1..samples.
std::vector<DiagramSample> cap_curve(CurveKind kind, int samples);

/// Blundon boundary curves x^2 = 4(2 + 10y - y^2 -/+ 2(1-2y)^{3/2}) on
/// y in (0, 1/2], axes (L/R_V, rho/R_V); returned (lower, upper), coinciding
/// at y = 1/2 (equilateral, x = 3 sqrt 3).
std::pair<double, double> blundon_x(double y);
std::pair<std::vector<DiagramSample>, std::vector<DiagramSample>> blundon_curves(int samples);

/// Bicentric-quadrilateral envelope at rho = 1, eta_1 >= 1:
/// L- = 2(2 + eta1 + 1/eta1), L+ = 4(eta1 + 1/eta1), d_O = sqrt(1 + eta1^2),
/// sampled as (L±/d_O, 1/d_O); both branches start at the square point
/// (4 sqrt 2, 1/sqrt 2).
std::pair<double, double> bicentric_quad_x(double eta1);
std::pair<std::vector<DiagramSample>, std::vector<DiagramSample>>
bicentric_quad_envelope(int samples, double eta_max = 16.0);

/// Deterministic random tangential n-gons: exterior angles pi - alpha_k drawn
/// from a symmetric Dirichlet over the 2 pi simplex (concentration 1 =
/// uniform; < 1 produces heavy tails / thin shapes), rejecting any vertex
/// angle outside (1e-4, pi - 1e-4). The per-sample RNG stream depends only on
/// (seed, index), so generation order and thread count cannot change results.
std::vector<TangentialPolygon> sample_random(int n, int count, std::uint64_t seed,
                                             const Normalization& norm,
                                             double concentration = 1.0);

} // namespace tang
