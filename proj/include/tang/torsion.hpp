#pragma once

#include "tang/grid_kernels.hpp"
#include "tang/polygon.hpp"

#include <array>
#include <string>
#include <vector>

namespace tang {

/// Convex solve domain: either the intersection of half-planes z.m_k <= rho
/// (a tangential polygon, m_k the unit outward side normals) or the disk.
struct ConvexDomain {
    bool is_disk = false;
    double rho = 0;
    std::vector<double> nx, ny;       // side normals (empty for the disk)
    std::array<double, 4> bbox{};     // xmin, xmax, ymin, ymax

    bool inside(double x, double y) const;
    /// Fraction theta in (0, 1] of the step h from (x, y) to the boundary
    /// along axis direction (dx, dy).
    double boundary_fraction(double x, double y, double dx, double dy, double h) const;
};

ConvexDomain make_domain(const TangentialPolygon& poly, double orientation = 0.0);
ConvexDomain make_disk_domain(double rho);

/// One uniform-grid solve of -Lap u = 1, u = 0 on the boundary (five-point
/// stencil, cut cells by linear interpolation of the zero boundary value).
struct LevelSolve {
    double q0 = 0;       // h^2 sum u
    double h = 0;
    std::size_t unknowns = 0;
    int iterations = 0;
    double max_u = 0;
    double min_u = 0;
};

LevelSolve solve_torsion_fixed_grid(const ConvexDomain& domain, double h, bool parallel = true);

/// Builds the stencil system only; exposed for the kernel benchmark.
kernels::StencilSystem build_stencil_system(const ConvexDomain& domain, double h);

struct TorsionSolution {
    double q0_estimate = 0;
    std::vector<double> resolutions_used;
    double richardson_error = 0; // estimated relative error
    double max_u = 0;
};

/// Richardson-extrapolated Q0 over successive grid halvings, starting from
/// 24 nodes across the incircle diameter, until the level-agreement error
/// estimate falls below target_rel_err (>= 1e-4).
TorsionSolution solve_torsion(const ConvexDomain& domain, double target_rel_err);
TorsionSolution solve_torsion(const TangentialPolygon& poly, double target_rel_err);
TorsionSolution solve_torsion_disk(double rho, double target_rel_err);

enum class TableId { area_pi, circumradius_1_regular, circumradius_1_isosceles };

TableId table_id_from_string(const std::string& s);
std::string to_string(TableId id);

/// A published reference table, transcribed verbatim.
struct ReferenceTable {
    TableId id{};
    std::vector<std::string> columns;
    struct Row {
        std::string label;
        std::vector<double> values;
    };
    std::vector<Row> rows;
};

ReferenceTable reference_table(TableId id);

/// Distance moment I(q) = integral over the polygon of dist(z, boundary)^q,
/// by quadrature over the incentre fan (q in {0, 1, 2}); equals
/// 2 A rho^q / ((q+1)(q+2)) for tangential polygons.
double distance_moment(const TangentialPolygon& poly, int q);
double distance_moment_disk(double rho, int q);

} // namespace tang
