#include "tang/polygon.hpp"

#include "tang/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tang {

namespace {

constexpr double kPi = std::numbers::pi;

double angle_sum_target(std::size_t n) { return (static_cast<double>(n) - 2.0) * kPi; }

} // namespace

double stable_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end(), [](double a, double b) {
        const double fa = std::fabs(a), fb = std::fabs(b);
        return fa != fb ? fa < fb : a < b;
    });
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

TangentialPolygon::TangentialPolygon(double rho, std::vector<double> t_values)
    : rho_(rho), t_(std::move(t_values)) {
    if (t_.size() < 3) throw TooFewVertices("need at least 3 vertices, got " + std::to_string(t_.size()));
    if (!(rho_ > 0.0) || !std::isfinite(rho_)) throw ParameterOutOfRange("inradius must be positive");
    double half_sum = 0.0;
    for (double t : t_) {
        if (!(t > 0.0) || !std::isfinite(t))
            throw NonConvexAngle("T_k = cot(alpha_k/2) must be positive and finite");
        half_sum += std::atan2(1.0, t); // arccot(t) = alpha_k / 2
        if (t > kDegenerateT) degenerate_ = true;
    }
    const double target = 0.5 * angle_sum_target(t_.size());
    if (std::fabs(half_sum - target) > kAngleSumRelTol * target)
        throw AngleSumViolation("sum of angles is " + std::to_string(2.0 * half_sum) +
                                ", expected " + std::to_string(2.0 * target));
}

std::vector<double> TangentialPolygon::angles() const {
    std::vector<double> a(t_.size());
    for (std::size_t k = 0; k < t_.size(); ++k) a[k] = 2.0 * std::atan2(1.0, t_[k]);
    return a;
}

std::vector<double> TangentialPolygon::tangent_lengths() const {
    std::vector<double> eta(t_.size());
    for (std::size_t k = 0; k < t_.size(); ++k) eta[k] = rho_ * t_[k];
    return eta;
}

std::vector<double> TangentialPolygon::side_lengths() const {
    const std::size_t n = t_.size();
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = rho_ * (t_[k] + t_[(k + 1) % n]);
    return s;
}

TangentialPolygon from_angles(std::span<const double> angles, double rho) {
    const std::size_t n = angles.size();
    if (n < 3) throw TooFewVertices("need at least 3 angles, got " + std::to_string(n));
    double sum = 0.0;
    for (double a : angles) {
        if (!(a > 0.0 && a < kPi)) throw NonConvexAngle("vertex angle must lie in (0, pi)");
        sum += a;
    }
    const double target = angle_sum_target(n);
    if (std::fabs(sum - target) > kAngleSumRelTol * target)
        throw AngleSumViolation("sum of angles is " + std::to_string(sum) + ", expected " +
                                std::to_string(target));
    const double shift = (target - sum) / static_cast<double>(n);
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = angles[k] + shift;
        if (!(a > 0.0 && a < kPi)) throw NonConvexAngle("vertex angle must lie in (0, pi)");
        t[k] = 1.0 / std::tan(0.5 * a);
    }
    return TangentialPolygon(rho, std::move(t));
}

TangentialPolygon from_tangent_lengths(std::span<const double> eta, double rho) {
    if (eta.size() < 3) throw TooFewVertices("need at least 3 tangent lengths");
    if (!(rho > 0.0)) throw ParameterOutOfRange("inradius must be positive");
    std::vector<double> t(eta.size());
    for (std::size_t k = 0; k < eta.size(); ++k) {
        if (!(eta[k] > 0.0) || !std::isfinite(eta[k]))
            throw NonPositiveTangentLength("eta_" + std::to_string(k) + " = " + std::to_string(eta[k]));
        t[k] = eta[k] / rho;
    }
    return TangentialPolygon(rho, std::move(t));
}

GeometricReport functionals(const TangentialPolygon& poly) {
    const auto t = poly.t_values();
    const double rho = poly.rho();
    std::vector<double> s1(t.size()), s3(t.size()), s5(t.size());
    double tmax = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double T = t[k];
        const double T3 = T * T * T;
        s1[k] = T;
        s3[k] = T + T3 / 3.0;
        s5[k] = T + 2.0 * T3 / 3.0 + T3 * T * T / 5.0;
        tmax = std::max(tmax, T);
    }
    const double sum_t = stable_sum(std::move(s1));
    const double rho2 = rho * rho;
    const double rho3 = rho2 * rho;
    GeometricReport r;
    r.L = 2.0 * rho * sum_t;
    r.A = rho2 * sum_t;
    r.i2 = 2.0 * rho3 * stable_sum(std::move(s3));
    r.i4 = 2.0 * rho3 * rho2 * stable_sum(std::move(s5));
    r.I2 = rho * r.i2 / 4.0;
    r.d_O = rho * std::hypot(1.0, tmax);
    return r;
}

VertexList vertices(const TangentialPolygon& poly, double orientation) {
    const auto t = poly.t_values();
    const std::size_t n = t.size();
    const double rho = poly.rho();
    VertexList out;
    out.pts.resize(n);
    // phi = tangency angle of side k; vertex k+1 sits half an arc past it.
    double phi = orientation;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t kp = (k + 1) % n;
        const double half = std::atan(t[kp]);
        const double psi = phi + half;
        const double r = rho * std::hypot(1.0, t[kp]);
        out.pts[kp] = {r * std::cos(psi), r * std::sin(psi)};
        phi += 2.0 * half;
    }
    return out;
}

TangentialPolygon average_angles(const TangentialPolygon& poly, std::size_t i, std::size_t j) {
    const auto t = poly.t_values();
    if (i >= t.size() || j >= t.size())
        throw IndexOutOfRange("index " + std::to_string(std::max(i, j)) + " out of range for n = " +
                              std::to_string(t.size()));
    if (i == j) throw EqualIndices("angle-averaging needs two distinct vertices");
    std::vector<double> out(t.begin(), t.end());
    if (t[i] == t[j]) return TangentialPolygon(poly.rho(), std::move(out)); // exact fixed point
    const double ai = 2.0 * std::atan2(1.0, t[i]);
    const double aj = 2.0 * std::atan2(1.0, t[j]);
    const double mean = 0.5 * (ai + aj);
    const double tm = 1.0 / std::tan(0.5 * mean);
    out[i] = tm;
    out[j] = tm;
    return TangentialPolygon(poly.rho(), std::move(out));
}

double incentre_centroid_distance(double s1, double s2, double s3) {
    if (!(s1 > 0.0 && s2 > 0.0 && s3 > 0.0))
        throw DegenerateTriangle("side lengths must be positive");
    if (s1 + s2 <= s3 || s2 + s3 <= s1 || s3 + s1 <= s2)
        throw DegenerateTriangle("triangle inequality fails");
    const double S1 = s1 + s2 + s3;
    const double S2 = s1 * s2 + s2 * s3 + s3 * s1;
    const double S3 = s1 * s2 * s3;
    const double d2 = (5.0 * S1 * S2 - S1 * S1 * S1 - 18.0 * S3) / (9.0 * S1);
    return std::sqrt(std::max(d2, 0.0));
}

} // namespace tang
