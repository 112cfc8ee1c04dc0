#pragma once

#include "tang/family.hpp"
#include "tang/polygon.hpp"

#include <map>
#include <string>
#include <utility>

namespace tang {

/// Functionals of the auxiliary Neumann problem: for tangential polygons
/// Sigma_inf = rho i2 / 16 and Sigma_1 = (i2^2/L - i4)/16 <= 0.
struct SigmaPair {
    double sigma_inf = 0;
    double sigma_one = 0;
};

/// f(Q0) = a2 Q0^2 + a1 Q0 + a0; Q0 lies between the two (positive) roots.
struct RigidityQuadratic {
    double a2 = 0;
    double a1 = 0;
    double a0 = 0;

    double eval(double q0) const { return (a2 * q0 + a1) * q0 + a0; }

    /// Roots ordered (minus, plus), computed with the stable formulation
    /// (larger-magnitude root first, the other from a0/(a2*root)).
    std::pair<double, double> roots() const;
};

enum class BoundKind { lower, upper };

struct BoundEntry {
    double value = 0;
    BoundKind kind = BoundKind::lower;
    bool applicable = true;
};

using BoundsMap = std::map<std::string, BoundEntry>;

/// Everything the bound chain needs for one shape:
/// q_B <= q0_minus <= Q0 <= q_upper_sigma <= q0_plus.
struct BoundsReport {
    double q0_minus = 0;
    double q0_plus = 0;
    double q_B = 0;           // rho^2 A / 8
    double q_upper_sigma = 0; // rho i2 / 16 (= sigma_inf)
    double q1_tangential = 0; // 4 q0_minus / rho, via Q1 = 4 Q0 / rho
    double sigma_inf = 0;
    double sigma_one = 0;
    BoundsMap classical;
};

SigmaPair sigma_functionals(const GeometricReport& report, double rho);

RigidityQuadratic rigidity_quadratic(const GeometricReport& report, double rho);

/// delta = -(Sigma_1/L)(2AL^2 Sigma_inf - L^3 Sigma_1 - A^4),
/// Q0± = (-L Sigma_1 + A Sigma_inf ± sqrt(delta)) / A, ordered (minus, plus).
/// Throws NegativeDiscriminant when delta < 0 (invalid inputs).
std::pair<double, double> q0_roots_from_sigmas(double area, double length, const SigmaPair& sig);

/// Registry of classical bounds, each tagged lower/upper and with an
/// applicability flag (Solynin: triangles; cubic trial: isosceles triangles).
BoundsMap classical_bounds(const GeometricReport& report, double rho, const ShapeTag& tag);

/// Single-entry accessor; throws InapplicableBound when the named bound does
/// not apply to the tagged shape.
double classical_bound(const std::string& name, const GeometricReport& report, double rho,
                       const ShapeTag& tag);

enum class ThinKind { thin_rectangle, thin_isosceles, q0_minus_thin_isosceles };

/// Coefficient c in Q ~ c rho^2 A: 1/3, 1/6 and 21/128 respectively.
double thin_asymptote(ThinKind kind);

BoundsReport bounds_report(const GeometricReport& report, double rho, const ShapeTag& tag);

} // namespace tang
