#include "tang/torsion.hpp"

#include "tang/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tang {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCgTol = 1e-10;
constexpr int kBaseAcross = 24;       // nodes across 2 rho on the coarsest level
constexpr int kMinAcross = 20;        // below this the grid is too coarse
constexpr int kMaxLevels = 5;
constexpr std::size_t kMaxUnknowns = 40u * 1000u * 1000u;
constexpr double kThetaFloor = 1e-6;

} // namespace

bool ConvexDomain::inside(double x, double y) const {
    if (is_disk) return x * x + y * y < rho * rho;
    double d = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nx.size(); ++k) d = std::max(d, x * nx[k] + y * ny[k]);
    return d < rho;
}

double ConvexDomain::boundary_fraction(double x, double y, double dx, double dy, double h) const {
    double t = std::numeric_limits<double>::infinity();
    if (is_disk) {
        const double b = x * dx + y * dy;
        const double c = x * x + y * y - rho * rho;
        t = -b + std::sqrt(std::max(0.0, b * b - c));
    } else {
        for (std::size_t k = 0; k < nx.size(); ++k) {
            const double dn = dx * nx[k] + dy * ny[k];
            if (dn > 1e-14) t = std::min(t, (rho - (x * nx[k] + y * ny[k])) / dn);
        }
    }
    return std::clamp(t / h, kThetaFloor, 1.0);
}

ConvexDomain make_domain(const TangentialPolygon& poly, double orientation) {
    ConvexDomain d;
    d.rho = poly.rho();
    const auto t = poly.t_values();
    const std::size_t n = t.size();
    d.nx.resize(n);
    d.ny.resize(n);
    double phi = orientation;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    const auto vs = vertices(poly, orientation);
    for (std::size_t k = 0; k < n; ++k) {
        d.nx[k] = std::cos(phi);
        d.ny[k] = std::sin(phi);
        phi += 2.0 * std::atan(t[(k + 1) % n]);
        xmin = std::min(xmin, vs.pts[k].x);
        xmax = std::max(xmax, vs.pts[k].x);
        ymin = std::min(ymin, vs.pts[k].y);
        ymax = std::max(ymax, vs.pts[k].y);
    }
    d.bbox = {xmin, xmax, ymin, ymax};
    return d;
}

ConvexDomain make_disk_domain(double rho) {
    if (!(rho > 0.0)) throw ParameterOutOfRange("disk radius must be positive");
    ConvexDomain d;
    d.is_disk = true;
    d.rho = rho;
    d.bbox = {-rho, rho, -rho, rho};
    return d;
}

kernels::StencilSystem build_stencil_system(const ConvexDomain& domain, double h) {
    const auto [x0, x1, y0, y1] = domain.bbox;
    const auto count = [h](double lo, double hi) {
        return std::max<std::int64_t>(0, static_cast<std::int64_t>(
                                             std::ceil((hi - lo - 0.5 * h) / h - 1e-12)));
    };
    const std::int64_t nx = count(x0, x1), ny = count(y0, y1);
    if (nx <= 0 || ny <= 0) throw ResolutionTooCoarse("grid has no interior nodes");
    const auto coord_x = [&](std::int64_t i) { return x0 + (0.5 + static_cast<double>(i)) * h; };
    const auto coord_y = [&](std::int64_t j) { return y0 + (0.5 + static_cast<double>(j)) * h; };

    std::vector<std::int32_t> index(static_cast<std::size_t>(nx * ny), -1);
    std::int32_t n_unknowns = 0;
    for (std::int64_t i = 0; i < nx; ++i)
        for (std::int64_t j = 0; j < ny; ++j)
            if (domain.inside(coord_x(i), coord_y(j))) index[i * ny + j] = n_unknowns++;

    kernels::StencilSystem sys;
    sys.n = static_cast<std::size_t>(n_unknowns);
    sys.inv_h2 = 1.0 / (h * h);
    sys.diag.assign(sys.n, 0.0);
    sys.nbr.assign(4 * sys.n, -1);
    static constexpr int kDir[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (std::int64_t i = 0; i < nx; ++i) {
        for (std::int64_t j = 0; j < ny; ++j) {
            const std::int32_t row = index[i * ny + j];
            if (row < 0) continue;
            double diag = 0.0;
            for (int a = 0; a < 4; ++a) {
                const std::int64_t i2 = i + kDir[a][0], j2 = j + kDir[a][1];
                std::int32_t nb = -1;
                if (i2 >= 0 && i2 < nx && j2 >= 0 && j2 < ny) nb = index[i2 * ny + j2];
                if (nb >= 0) {
                    sys.nbr[4 * row + a] = nb;
                    diag += 1.0;
                } else {
                    // cut cell: zero boundary value interpolated at distance theta*h
                    const double th = domain.boundary_fraction(coord_x(i), coord_y(j),
                                                               kDir[a][0], kDir[a][1], h);
                    diag += 1.0 / th;
                }
            }
            sys.diag[row] = diag * sys.inv_h2;
        }
    }
    return sys;
}

LevelSolve solve_torsion_fixed_grid(const ConvexDomain& domain, double h, bool parallel) {
    kernels::StencilSystem sys = build_stencil_system(domain, h);
    LevelSolve out;
    out.h = h;
    out.unknowns = sys.n;
    std::vector<double> rhs(sys.n, 1.0);
    std::vector<double> u(sys.n, 0.0);
    const auto cg = kernels::cg_solve(sys, rhs, u, kCgTol, 200000, parallel);
    if (!cg.converged) throw NonConvergent("CG stalled at relative residual " +
                                           std::to_string(cg.rel_residual));
    out.iterations = cg.iterations;
    out.q0 = (parallel ? kernels::sum_omp(u.data(), u.size())
                       : kernels::sum_serial(u.data(), u.size())) * h * h;
    double mx = 0.0, mn = 0.0;
    for (double v : u) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    out.max_u = mx;
    out.min_u = mn;
    return out;
}

TorsionSolution solve_torsion(const ConvexDomain& domain, double target_rel_err) {
    if (!(target_rel_err >= 1e-4))
        throw ParameterOutOfRange("target_rel_err must be at least 1e-4");
    double h = 2.0 * domain.rho / kBaseAcross;
    // respect the unknown cap by coarsening, but never below 20 nodes across 2 rho
    const auto [x0, x1, y0, y1] = domain.bbox;
    const auto estimate = [&](double hh) {
        return static_cast<double>((x1 - x0) / hh + 1) * ((y1 - y0) / hh + 1);
    };
    while (estimate(h) > static_cast<double>(kMaxUnknowns) / 4.0) h *= 2.0;
    if (2.0 * domain.rho / h < kMinAcross)
        throw ResolutionTooCoarse("fewer than 20 interior nodes across the incircle diameter");

    TorsionSolution sol;
    std::vector<double> q_levels;
    double q_extrap = 0.0, est = std::numeric_limits<double>::infinity();
    for (int level = 0; level < kMaxLevels; ++level) {
        if (estimate(h) > static_cast<double>(kMaxUnknowns)) break;
        const LevelSolve ls = solve_torsion_fixed_grid(domain, h);
        q_levels.push_back(ls.q0);
        sol.resolutions_used.push_back(h);
        sol.max_u = ls.max_u;
        if (q_levels.size() >= 2) {
            const double q1 = q_levels[q_levels.size() - 2];
            const double q2 = q_levels.back();
            q_extrap = (4.0 * q2 - q1) / 3.0; // second-order Richardson
            est = std::fabs(q2 - q1) / (3.0 * std::fabs(q_extrap));
            if (est < target_rel_err) {
                sol.q0_estimate = q_extrap;
                sol.richardson_error = est;
                return sol;
            }
        }
        h *= 0.5;
    }
    if (q_levels.size() < 2)
        throw ResolutionTooCoarse("could not afford two grid levels within the unknown budget");
    sol.q0_estimate = q_extrap;
    sol.richardson_error = est;
    if (est > 5.0 * target_rel_err)
        throw NonConvergent("grid levels disagree at relative " + std::to_string(est));
    return sol;
}

TorsionSolution solve_torsion(const TangentialPolygon& poly, double target_rel_err) {
    return solve_torsion(make_domain(poly), target_rel_err);
}

TorsionSolution solve_torsion_disk(double rho, double target_rel_err) {
    return solve_torsion(make_disk_domain(rho), target_rel_err);
}

TableId table_id_from_string(const std::string& s) {
    if (s == "area_pi") return TableId::area_pi;
    if (s == "circumradius_1_regular") return TableId::circumradius_1_regular;
    if (s == "circumradius_1_isosceles") return TableId::circumradius_1_isosceles;
    throw UnknownTable("'" + s + "'");
}

std::string to_string(TableId id) {
    switch (id) {
        case TableId::area_pi: return "area_pi";
        case TableId::circumradius_1_regular: return "circumradius_1_regular";
        case TableId::circumradius_1_isosceles: return "circumradius_1_isosceles";
    }
    throw UnknownTable("invalid id");
}

ReferenceTable reference_table(TableId id) {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    ReferenceTable t;
    t.id = id;
    switch (id) {
        case TableId::area_pi:
            t.columns = {"four_q0_over_A2", "q0", "L", "sigma_inf", "minus_sigma_1"};
            t.rows = {
                {"3", {0.11547, 0.28492, 8.0806, 0.47485, 0.14769}},
                {"4", {0.14058, 0.34687, 7.0898, 0.41123, 0.024296}},
                {"5", {0.14943, 0.36870, 6.7565, 0.39936, 0.007822}},
                {"6", {0.15340, 0.37850, 6.5978, 0.39571, 0.003349}},
                {"7", {0.15546, 0.38358, 6.5086, 0.39426, 0.001689}},
                {"8", {0.15664, 0.38649, 6.4530, 0.39359, 0.0009485}},
                {"9", {0.15736, 0.38827, 6.4159, 0.39325, 0.0005754}},
                {"10", {0.15783, 0.38943, 6.3899, 0.39306, 0.0003699}},
                {"11", {0.15815, 0.39022, 6.3709, 0.39294, 0.0002489}},
                {"12", {0.15837, 0.39076, 6.3566, 0.39287, 0.0001738}},
                {"inf", {0.15915, 0.3927, 6.2832, 0.3927, 0.0}},
            };
            break;
        case TableId::circumradius_1_regular:
            t.columns = {"four_q0_over_A2", "A", "q0", "L", "sigma_inf", "minus_sigma_1", "rho"};
            t.rows = {
                {"3", {s3 / 15.0, 3.0 * s3 / 4.0, 9.0 * s3 / 320.0, 3.0 * s3, 3.0 * s3 / 64.0,
                       3.0 * s3 / 320.0, 0.5}},
                {"4", {0.14058, 2.0, 0.14058, 4.0 * s2, 1.0 / 6.0, s2 / 180.0, 1.0 / s2}},
                {"6", {0.15340, 3.0 * s3 / 2.0, 0.2589, 6.0, 5.0 * s3 / 32.0, 1.0 / 480.0,
                       s3 / 2.0}},
                {"inf", {1.0 / (2.0 * kPi), kPi, kPi / 8.0, 2.0 * kPi, kPi / 8.0, 0.0, 1.0}},
            };
            break;
        case TableId::circumradius_1_isosceles:
            t.columns = {"four_q0_over_A2", "A", "q0", "L", "sigma_inf", "minus_sigma_1", "rho"};
            t.rows = {
                {"pi/3", {s3 / 15.0, 3.0 * s3 / 4.0, 9.0 * s3 / 320.0, 3.0 * s3, 3.0 * s3 / 64.0,
                          3.0 * s3 / 320.0, 0.5}},
                {"pi/2", {0.10436, 1.0, 0.02609, 2.0 + 2.0 * s2, (3.0 - 2.0 * s2) / 3.0,
                          (131.0 - 91.0 * s2) / 90.0, s2 - 1.0}},
            };
            break;
    }
    return t;
}

namespace {

/// Integral over the triangle (origin, a, b) of (rho - z.m)^q, q <= 2 exactly,
/// by the three-edge-midpoint rule.
double tri_moment(double ax, double ay, double bx, double by, double mx, double my, double rho,
                  int q) {
    const double area = 0.5 * std::fabs(ax * by - ay * bx);
    const double pts[3][2] = {{0.5 * ax, 0.5 * ay},
                              {0.5 * bx, 0.5 * by},
                              {0.5 * (ax + bx), 0.5 * (ay + by)}};
    double acc = 0.0;
    for (const auto& p : pts) {
        const double d = rho - (p[0] * mx + p[1] * my);
        acc += q == 0 ? 1.0 : (q == 1 ? d : d * d);
    }
    return acc * area / 3.0;
}

} // namespace

double distance_moment(const TangentialPolygon& poly, int q) {
    if (q < 0 || q > 2) throw UnsupportedExponent("q must be 0, 1 or 2");
    const auto vs = vertices(poly);
    const auto t = poly.t_values();
    const std::size_t n = t.size();
    // normals repeat the vertices() tangency construction
    double phi = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = vs.pts[k];
        const auto& b = vs.pts[(k + 1) % n];
        total += tri_moment(a.x, a.y, b.x, b.y, std::cos(phi), std::sin(phi), poly.rho(), q);
        phi += 2.0 * std::atan(t[(k + 1) % n]);
    }
    return total;
}

double distance_moment_disk(double rho, int q) {
    if (q < 0 || q > 2) throw UnsupportedExponent("q must be 0, 1 or 2");
    // 2 pi integral_0^rho (rho - r)^q r dr = 2 pi rho^{q+2} / ((q+1)(q+2))
    return 2.0 * kPi * std::pow(rho, q + 2) / ((q + 1.0) * (q + 2.0));
}

} // namespace tang
