#pragma once

#include "tang/bounds.hpp"
#include "tang/polygon.hpp"
#include "tang/shapes.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tang {

/// One shape of the regression set with its bound-sandwich outcome:
/// q_B <= Q0- <= Q0(FD) <= min(Sigma_inf, A^2/8pi, rho^2 A/3) <= Q0+,
/// with the solver error band honoured, plus the known spot value when the
/// shape has one.
struct VerifyRow {
    std::string name;
    double q_B = 0;
    double q0_minus = 0;
    double q0_fd = 0;
    double fd_err = 0;
    double min_upper = 0;
    double q0_plus = 0;
    std::optional<double> spot_expected;
    bool pass = false;
    std::string detail;
};

/// Runs the full regression set (disk; regular n = 3..8 at area pi; isosceles
/// sigma in {0.1, 2-sqrt3, sqrt2-1, 0.7} at area sqrt3; rhombi tau in {1,2,4}
/// at area pi). Writes one line per shape to `out` when non-null.
std::vector<VerifyRow> run_bound_verification(double rel_err, std::ostream* out);

} // namespace tang
