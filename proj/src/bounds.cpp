#include "tang/bounds.hpp"

#include "tang/errors.hpp"

#include <cmath>
#include <numbers>

namespace tang {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

std::pair<double, double> RigidityQuadratic::roots() const {
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    if (disc < 0.0) throw NegativeDiscriminant("discriminant = " + std::to_string(disc));
    const double s = std::sqrt(disc);
    const double q = -0.5 * (a1 + std::copysign(s, a1));
    const double r1 = q / a2;
    const double r2 = (q != 0.0) ? a0 / q : r1;
    return r1 <= r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

SigmaPair sigma_functionals(const GeometricReport& report, double rho) {
    SigmaPair s;
    s.sigma_inf = rho * report.i2 / 16.0;
    s.sigma_one = (report.i2 * report.i2 / report.L - report.i4) / 16.0;
    return s;
}

RigidityQuadratic rigidity_quadratic(const GeometricReport& report, double rho) {
    const double A = report.A, i2 = report.i2, i4 = report.i4;
    RigidityQuadratic f;
    f.a2 = 32.0 * A;
    f.a1 = -(4.0 / rho) * (2.0 * A * i4 - rho * i2 * i2 + A * i2 * rho * rho);
    f.a0 = A * rho * (A * i4 - 0.375 * i2 * i2 * rho);
    return f;
}

std::pair<double, double> q0_roots_from_sigmas(double area, double length, const SigmaPair& sig) {
    const double delta =
        -(sig.sigma_one / length) *
        (2.0 * area * length * length * sig.sigma_inf - length * length * length * sig.sigma_one -
         area * area * area * area);
    if (delta < 0.0) throw NegativeDiscriminant("delta = " + std::to_string(delta));
    const double mid = -length * sig.sigma_one + area * sig.sigma_inf;
    const double root = std::sqrt(delta);
    return {(mid - root) / area, (mid + root) / area};
}

BoundsMap classical_bounds(const GeometricReport& report, double rho, const ShapeTag& tag) {
    const double A = report.A, L = report.L;
    BoundsMap m;
    m["polya_szego"] = {rho * rho * A / 8.0, BoundKind::lower, true};
    m["a3l2_lower"] = {A * A * A / (3.0 * L * L), BoundKind::lower, true};
    const double h_denom = L + std::sqrt(4.0 * kPi * A);
    m["cheeger"] = {32.0 * kPi * A * A * A * A / (h_denom * h_denom * h_denom * h_denom),
                    BoundKind::lower, true};
    m["st_venant"] = {A * A / (8.0 * kPi), BoundKind::upper, true};
    m["sigma_inf"] = {rho * report.i2 / 16.0, BoundKind::upper, true};
    m["makai"] = {rho * rho * A / 3.0, BoundKind::upper, true};
    m["a3l2_upper"] = {2.0 * A * A * A / (3.0 * L * L), BoundKind::upper, true};

    BoundEntry sol{(9.0 * std::sqrt(3.0) / 20.0) * rho * rho * rho * rho, BoundKind::lower,
                   is_triangle(tag)};
    if (!sol.applicable) sol.value = std::nan("");
    m["solynin"] = sol;

    BoundEntry cub{std::nan(""), BoundKind::lower, is_isosceles_triangle(tag)};
    if (cub.applicable) {
        const double sigma =
            tag.family == ShapeFamily::isosceles_sigma ? tag.param1 : 2.0 - std::sqrt(3.0);
        const double tau = 2.0 * sigma / (1.0 - sigma * sigma); // tan(alpha/2)
        cub.value = A * A / (30.0 * tau + 10.0 / tau);
    }
    m["cubic_trial"] = cub;
    return m;
}

double classical_bound(const std::string& name, const GeometricReport& report, double rho,
                       const ShapeTag& tag) {
    const auto m = classical_bounds(report, rho, tag);
    const auto it = m.find(name);
    if (it == m.end()) throw InapplicableBound("unknown bound '" + name + "'");
    if (!it->second.applicable)
        throw InapplicableBound("'" + name + "' does not apply to this shape family");
    return it->second.value;
}

double thin_asymptote(ThinKind kind) {
    switch (kind) {
        case ThinKind::thin_rectangle: return 1.0 / 3.0;
        case ThinKind::thin_isosceles: return 1.0 / 6.0;
        case ThinKind::q0_minus_thin_isosceles: return 21.0 / 128.0;
    }
    throw ParameterOutOfRange("unknown thin-asymptote kind");
}

BoundsReport bounds_report(const GeometricReport& report, double rho, const ShapeTag& tag) {
    BoundsReport out;
    const SigmaPair sig = sigma_functionals(report, rho);
    const auto [qm, qp] = q0_roots_from_sigmas(report.A, report.L, sig);
    out.q0_minus = qm;
    out.q0_plus = qp;
    out.q_B = rho * rho * report.A / 8.0;
    out.q_upper_sigma = sig.sigma_inf;
    out.q1_tangential = 4.0 * qm / rho;
    out.sigma_inf = sig.sigma_inf;
    out.sigma_one = sig.sigma_one;
    out.classical = classical_bounds(report, rho, tag);
    return out;
}

} // namespace tang
