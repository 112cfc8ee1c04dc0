#pragma once

#include "tang/polygon.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tang {

/// Verdict of the circulant system M eta = s. When feasible, eta holds the
/// tangent lengths; when the minimum eta is zero (within tolerance) the
/// verdict is feasible with `degenerate` set. `witness` names the violated
/// condition otherwise. `nullspace_shift` is the scalar c added to the
/// pseudoinverse solution along ((-1)^k) for even n.
struct FeasibilityResult {
    bool feasible = false;
    bool degenerate = false;
    std::vector<double> eta;
    std::string witness;
    std::optional<double> nullspace_shift;
};

/// M(n) = I + P, P the cyclic shift; det(M) = 1 - (-1)^n, M 1 = 2 1.
std::vector<std::vector<double>> circulant_matrix(int n);

/// Odd n: eta = M^{-1} s via the alternating-sign inverse, feasible iff all
/// eta_k >= 0. Even n: requires the parity condition
/// sum(odd-indexed s) = sum(even-indexed s); then eta = pinv(M) s + c nv with
/// c maximizing min_k eta_k.
FeasibilityResult solve_tangent_lengths(std::span<const double> sides);

/// Tangential-hexagon criterion: parity plus
/// s1-s2+s3 > 0, s3-s4+s5 > 0, s5-s6+s1 > 0.
bool hexagon_conditions(std::span<const double> sides);

/// Alternating sums of the elementary symmetric polynomials e_k of 1/T_k:
/// (e0 - e2 + e4 - ..., e1 - e3 + e5 - ...). The first vanishes for odd n,
/// the second for even n, on every valid polygon. The span overload accepts
/// unvalidated T values, so a violated constraint shows up as a nonzero
/// applicable residual.
std::pair<double, double> angle_sum_residuals(const TangentialPolygon& poly);
std::pair<double, double> angle_sum_residuals(std::span<const double> t_values);

} // namespace tang
