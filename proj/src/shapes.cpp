#include "tang/shapes.hpp"

#include "tang/errors.hpp"

#include <cmath>
#include <numbers>

namespace tang {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-4;

double scale_rho(const std::vector<double>& t, const Normalization& norm, double rv_per_rho) {
    double sum_t = 0.0;
    for (double v : t) sum_t += v;
    switch (norm.kind) {
        case Normalization::Kind::inradius:
            if (!(norm.value > 0.0)) throw ParameterOutOfRange("inradius must be positive");
            return norm.value;
        case Normalization::Kind::area:
            if (!(norm.value > 0.0)) throw ParameterOutOfRange("area must be positive");
            return std::sqrt(norm.value / sum_t);
        case Normalization::Kind::circumradius:
            if (!(norm.value > 0.0)) throw ParameterOutOfRange("circumradius must be positive");
            if (!(rv_per_rho > 0.0))
                throw ParameterOutOfRange("circumradius normalization undefined for this family");
            return norm.value / rv_per_rho;
    }
    throw ParameterOutOfRange("unknown normalization");
}

/// splitmix64; the per-index stream seed is seed advanced by index.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_double() { // in (0, 1)
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }
    double next_exp() { return -std::log(next_double()); }
    double next_normal() {
        const double u = next_double(), v = next_double();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
    }
    // Marsaglia-Tsang, with the alpha < 1 boost.
    double next_gamma(double alpha) {
        if (alpha < 1.0) {
            const double u = next_double();
            return next_gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }
};

} // namespace

TangentialPolygon regular_ngon(int n, const Normalization& norm) {
    if (n < 3) throw TooFewVertices("regular n-gon needs n >= 3");
    const double tau = std::tan(kPi / n);
    std::vector<double> t(static_cast<std::size_t>(n), tau);
    const double rho = scale_rho(t, norm, std::hypot(1.0, tau)); // R = rho sqrt(1 + tau^2)
    return TangentialPolygon(rho, std::move(t));
}

TangentialPolygon isosceles(double sigma, const Normalization& norm) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw ParameterOutOfRange("sigma must lie in (0, 1)");
    const double ta = (1.0 - sigma * sigma) / (2.0 * sigma);
    const double tb = (1.0 + sigma) / (1.0 - sigma);
    std::vector<double> t{ta, tb, tb};
    // R_V = a (1 + T_A^2) / (2 T_A) with half-base a = rho T_B
    const double rv = tb * (1.0 + ta * ta) / (2.0 * ta);
    const double rho = scale_rho(t, norm, rv);
    return TangentialPolygon(rho, std::move(t));
}

TangentialPolygon isosceles(double sigma, double area) {
    return isosceles(sigma, Normalization::area(area));
}

TangentialPolygon rhombus(double tau, const Normalization& norm) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterOutOfRange("tau must be positive");
    std::vector<double> t{1.0 / tau, tau, 1.0 / tau, tau};
    const double rv_per_rho = tau == 1.0 ? std::sqrt(2.0) : -1.0; // bicentric only when square
    const double rho = scale_rho(t, norm, rv_per_rho);
    return TangentialPolygon(rho, std::move(t));
}

TangentialPolygon kite(double alpha, double beta, const Normalization& norm) {
    const double gamma = 2.0 * kPi - alpha - 2.0 * beta;
    const double angles[4] = {alpha, beta, gamma, beta};
    for (double a : angles)
        if (!(a > 0.0 && a < kPi)) throw ParameterOutOfRange("kite angles must lie in (0, pi)");
    std::vector<double> t;
    t.reserve(4);
    for (double a : angles) t.push_back(1.0 / std::tan(0.5 * a));
    const double rho = scale_rho(t, norm, -1.0);
    return TangentialPolygon(rho, std::move(t));
}

GeometricReport disk_functionals(double rho) {
    if (!(rho > 0.0)) throw ParameterOutOfRange("inradius must be positive");
    GeometricReport r;
    const double r2 = rho * rho;
    r.L = 2.0 * kPi * rho;
    r.A = kPi * r2;
    r.i2 = 2.0 * kPi * r2 * rho;
    r.i4 = 2.0 * kPi * r2 * r2 * rho;
    r.I2 = kPi * r2 * r2 / 2.0;
    r.d_O = rho;
    return r;
}

double cap_curve_x(CurveKind kind, double y) {
    if (!(y > 0.0 && y <= 1.0)) throw ParameterOutOfRange("y must lie in (0, 1]");
    const double c = std::sqrt(std::max(0.0, 1.0 - y * y));
    switch (kind) {
        case CurveKind::one_cap: return (kPi + 2.0 * std::asin(y)) * y + 2.0 * c;
        case CurveKind::two_cap_lower: return 4.0 * (c + y * std::asin(y));
        case CurveKind::bcs03_upper: return 4.0 * (c + std::asin(y));
    }
    throw UnknownCurve("unknown cap curve kind");
}

std::vector<DiagramSample> cap_curve(CurveKind kind, int samples) {
    if (samples < 2) throw ParameterOutOfRange("need at least 2 samples");
    std::vector<DiagramSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    const ShapeFamily fam = kind == CurveKind::one_cap ? ShapeFamily::one_cap : ShapeFamily::two_cap;
    const char* axes = kind == CurveKind::one_cap ? "L_over_dO" : "L_over_R";
    for (int i = 1; i <= samples; ++i) {
        const double y = static_cast<double>(i) / samples;
        out.push_back({fam, kind == CurveKind::one_cap ? 1 : 2, y, 0.0, cap_curve_x(kind, y), y, axes});
    }
    return out;
}

std::pair<double, double> blundon_x(double y) {
    if (!(y > 0.0 && y <= 0.5)) throw ParameterOutOfRange("y must lie in (0, 1/2]");
    const double w = std::pow(std::max(0.0, 1.0 - 2.0 * y), 1.5);
    const double base = 2.0 + 10.0 * y - y * y;
    return {2.0 * std::sqrt(std::max(0.0, base - 2.0 * w)), 2.0 * std::sqrt(base + 2.0 * w)};
}

std::pair<std::vector<DiagramSample>, std::vector<DiagramSample>> blundon_curves(int samples) {
    if (samples < 2) throw ParameterOutOfRange("need at least 2 samples");
    std::vector<DiagramSample> lo, hi;
    lo.reserve(samples);
    hi.reserve(samples);
    for (int i = 1; i <= samples; ++i) {
        const double y = 0.5 * static_cast<double>(i) / samples;
        const auto [xl, xu] = blundon_x(y);
        lo.push_back({ShapeFamily::triangle_angles, 3, y, 0.0, xl, y, "L_over_RV"});
        hi.push_back({ShapeFamily::triangle_angles, 3, y, 0.0, xu, y, "L_over_RV"});
    }
    return {std::move(lo), std::move(hi)};
}

std::pair<double, double> bicentric_quad_x(double eta1) {
    if (!(eta1 >= 1.0)) throw ParameterOutOfRange("eta1 must be >= 1");
    const double d = std::hypot(1.0, eta1);
    const double s = eta1 + 1.0 / eta1;
    return {2.0 * (2.0 + s) / d, 4.0 * s / d};
}

std::pair<std::vector<DiagramSample>, std::vector<DiagramSample>>
bicentric_quad_envelope(int samples, double eta_max) {
    if (samples < 2) throw ParameterOutOfRange("need at least 2 samples");
    if (!(eta_max > 1.0)) throw ParameterOutOfRange("eta_max must exceed 1");
    std::vector<DiagramSample> lo, hi;
    lo.reserve(samples);
    hi.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double eta1 = 1.0 + (eta_max - 1.0) * static_cast<double>(i) / (samples - 1);
        const double y = 1.0 / std::hypot(1.0, eta1);
        const auto [xm, xp] = bicentric_quad_x(eta1);
        lo.push_back({ShapeFamily::kite, 4, eta1, 0.0, xm, y, "L_over_dO"});
        hi.push_back({ShapeFamily::kite, 4, eta1, 0.0, xp, y, "L_over_dO"});
    }
    return {std::move(lo), std::move(hi)};
}

std::vector<TangentialPolygon> sample_random(int n, int count, std::uint64_t seed,
                                             const Normalization& norm, double concentration) {
    if (n < 3) throw TooFewVertices("need n >= 3");
    if (count < 1) throw ParameterOutOfRange("count must be >= 1");
    if (!(concentration > 0.0)) throw ParameterOutOfRange("concentration must be positive");
    std::vector<TangentialPolygon> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<double> beta(static_cast<std::size_t>(n));
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int idx = 0; idx < count; ++idx) {
        // independent stream per sample index
        Rng rng(seed ^ (0xD1B54A32D192ED03ull * (static_cast<std::uint64_t>(idx) + 1)));
        for (;;) {
            double total = 0.0;
            for (int k = 0; k < n; ++k) {
                beta[k] = concentration == 1.0 ? rng.next_exp() : rng.next_gamma(concentration);
                total += beta[k];
            }
            bool ok = true;
            for (int k = 0; k < n; ++k) {
                beta[k] *= 2.0 * kPi / total; // exterior angles, sum 2 pi
                const double alpha = kPi - beta[k];
                if (!(alpha > kAngleEps && alpha < kPi - kAngleEps)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (int k = 0; k < n; ++k) t[k] = std::tan(0.5 * beta[k]); // cot(alpha/2)
            break;
        }
        const double rho = scale_rho(t, norm, -1.0);
        out.emplace_back(rho, t);
    }
    return out;
}

std::string to_string(ShapeFamily f) {
    switch (f) {
        case ShapeFamily::disk: return "disk";
        case ShapeFamily::regular: return "regular";
        case ShapeFamily::isosceles_sigma: return "isosceles_sigma";
        case ShapeFamily::rhombus_tau: return "rhombus_tau";
        case ShapeFamily::kite: return "kite";
        case ShapeFamily::triangle_angles: return "triangle_angles";
        case ShapeFamily::random_tangential: return "random_tangential";
        case ShapeFamily::one_cap: return "one_cap";
        case ShapeFamily::two_cap: return "two_cap";
    }
    return "unknown";
}

} // namespace tang
