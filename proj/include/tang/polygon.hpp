#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tang {

/// Relative tolerance on the vertex-angle sum constraint sum(alpha_k) = (n-2)*pi.
inline constexpr double kAngleSumRelTol = 1e-9;

/// T_k above this marks a near-flat (degenerate-ish) polygon; accepted but flagged.
inline constexpr double kDegenerateT = 1e8;

/// Bundle of the geometric functionals of one tangential polygon, all taken
/// about the incentre: perimeter L (= i0), area A, boundary moments i2, i4,
/// polar area moment I2, and the largest incentre-vertex distance d_O.
struct GeometricReport {
    double L = 0;
    double A = 0;
    double i2 = 0;
    double i4 = 0;
    double I2 = 0;
    double d_O = 0;
};

struct Vec2 {
    double x = 0;
    double y = 0;
};

/// Vertex coordinates with the incentre at the origin, counterclockwise.
struct VertexList {
    std::vector<Vec2> pts;
};

/// A convex polygon circumscribing the circle of radius rho centred at the
/// origin, stored canonically as (rho, T_k) with T_k = cot(alpha_k/2) > 0.
/// Immutable after construction; all operations on it are pure functions.
class TangentialPolygon {
public:
    /// Validates n >= 3, rho > 0, every T_k > 0 and the angle-sum constraint.
    TangentialPolygon(double rho, std::vector<double> t_values);

    double rho() const { return rho_; }
    std::size_t size() const { return t_.size(); }
    std::span<const double> t_values() const { return t_; }

    /// Vertex angles alpha_k = 2*arccot(T_k), each in (0, pi).
    std::vector<double> angles() const;

    /// Tangent lengths eta_k = rho * T_k.
    std::vector<double> tangent_lengths() const;

    /// Side lengths s_k = eta_k + eta_{k+1} (side k joins vertices k, k+1).
    std::vector<double> side_lengths() const;

    /// True when some T_k exceeds the near-flat threshold.
    bool near_degenerate() const { return degenerate_; }

private:
    double rho_;
    std::vector<double> t_;
    bool degenerate_ = false;
};

/// Accumulates in ascending order of magnitude so that any permutation of the
/// same values sums to the identical bits.
double stable_sum(std::vector<double> values);

/// Builds the polygon from vertex angles (radians). Angles are renormalized by
/// a uniform additive shift when the sum residual is within tolerance.
TangentialPolygon from_angles(std::span<const double> angles, double rho);

/// Builds the polygon from tangent lengths; T_k = eta_k / rho, no renormalization.
TangentialPolygon from_tangent_lengths(std::span<const double> eta, double rho);

/// All geometric functionals, via the T_k sums
///   L = 2 rho sum T,  A = rho^2 sum T,
///   i2 = 2 rho^3 sum (T + T^3/3),  i4 = 2 rho^5 sum (T + 2T^3/3 + T^5/5),
///   I2 = rho i2 / 4,  d_O = rho sqrt(1 + max T^2).
GeometricReport functionals(const TangentialPolygon& poly);

/// Vertex coordinates. Tangency point of side 0 sits at polar angle
/// `orientation`; consecutive tangency points are separated by arcs
/// 2*arctan(T_{k+1}) (the two equal half-arcs flanking vertex k+1).
VertexList vertices(const TangentialPolygon& poly, double orientation = 0.0);

/// Replaces angles i and j by their mean, keeping rho. Reduces L, i2, i4 and
/// does not increase d_O; strictly reduces the first three when alpha_i != alpha_j.
TangentialPolygon average_angles(const TangentialPolygon& poly, std::size_t i, std::size_t j);

/// Incentre-centroid distance of the triangle with the given side lengths,
/// d_IG^2 = (5 S1 S2 - S1^3 - 18 S3) / (9 S1) in the elementary symmetric
/// functions of the sides.
double incentre_centroid_distance(double s1, double s2, double s3);

} // namespace tang
