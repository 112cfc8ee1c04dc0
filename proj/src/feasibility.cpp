#include "tang/feasibility.hpp"

#include "tang/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tang {

std::vector<std::vector<double>> circulant_matrix(int n) {
    if (n < 3) throw TooFewVertices("circulant system needs n >= 3");
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1.0;
        m[i][(i + 1) % n] = 1.0;
    }
    return m;
}

FeasibilityResult solve_tangent_lengths(std::span<const double> sides) {
    const std::size_t n = sides.size();
    if (n < 3) throw TooFewVertices("need at least 3 sides");
    double smax = 0.0;
    for (double s : sides) {
        if (!(s > 0.0) || !std::isfinite(s)) throw NonPositiveSide("side lengths must be positive");
        smax = std::max(smax, s);
    }
    const double tol = 1e-12 * smax;

    FeasibilityResult res;
    if (n % 2 == 1) {
        // eta_i = (1/2) sum_j (-1)^j s_{i+j}
        res.eta.resize(n);
        double emin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0, sign = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += sign * sides[(i + j) % n];
                sign = -sign;
            }
            res.eta[i] = 0.5 * acc;
            emin = std::min(emin, res.eta[i]);
        }
        if (emin > tol) {
            res.feasible = true;
        } else if (emin >= -tol) {
            res.feasible = true;
            res.degenerate = true;
            res.witness = "feasible_degenerate";
        } else {
            res.feasible = false;
            res.eta.clear();
            res.witness = "negative_tangent_length";
        }
        return res;
    }

    // even n: rhs must be orthogonal to the nullspace of M^T
    double odd_sum = 0.0, even_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) (k % 2 == 0 ? odd_sum : even_sum) += sides[k];
    if (std::fabs(odd_sum - even_sum) > 1e-10 * (odd_sum + even_sum)) {
        res.witness = "parity_sum";
        return res;
    }

    // particular solution by forward recursion, projected onto the
    // pseudoinverse (minimum-norm) solution, then shifted along nv = ((-1)^k)
    // to maximize min_k eta_k.
    std::vector<double> eta(n);
    eta[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) eta[k] = sides[k - 1] - eta[k - 1];
    double dot = 0.0;
    for (std::size_t k = 0; k < n; ++k) dot += (k % 2 == 0 ? eta[k] : -eta[k]);
    dot /= static_cast<double>(n);
    double min_plus = std::numeric_limits<double>::infinity();  // entries moving as +c
    double min_minus = std::numeric_limits<double>::infinity(); // entries moving as -c
    for (std::size_t k = 0; k < n; ++k) {
        const double nv = (k % 2 == 0) ? 1.0 : -1.0;
        eta[k] -= dot * nv;
        (nv > 0 ? min_plus : min_minus) = std::min(nv > 0 ? min_plus : min_minus, eta[k]);
    }
    const double c = 0.5 * (min_minus - min_plus); // max-min of the piecewise-linear envelope
    double emin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        eta[k] += (k % 2 == 0) ? c : -c;
        emin = std::min(emin, eta[k]);
    }
    res.nullspace_shift = c;
    if (emin > tol) {
        res.feasible = true;
        res.eta = std::move(eta);
    } else if (emin >= -tol) {
        res.feasible = true;
        res.degenerate = true;
        res.witness = "feasible_degenerate";
        res.eta = std::move(eta);
    } else {
        res.feasible = false;
        res.witness = (n == 6) ? "adjacent_triple" : "max_min_negative";
    }
    return res;
}

bool hexagon_conditions(std::span<const double> sides) {
    if (sides.size() != 6) throw WrongArity("hexagon criterion needs exactly 6 sides");
    double total = 0.0;
    for (double s : sides) {
        if (!(s > 0.0)) return false;
        total += s;
    }
    const double parity = sides[0] + sides[2] + sides[4] - (sides[1] + sides[3] + sides[5]);
    if (std::fabs(parity) > 1e-10 * total) return false;
    const double tol = 1e-12 * total;
    return sides[0] - sides[1] + sides[2] > tol && sides[2] - sides[3] + sides[4] > tol &&
           sides[4] - sides[5] + sides[0] > tol;
}

std::pair<double, double> angle_sum_residuals(const TangentialPolygon& poly) {
    return angle_sum_residuals(poly.t_values());
}

std::pair<double, double> angle_sum_residuals(std::span<const double> t) {
    const std::size_t n = t.size();
    // elementary symmetric polynomials of 1/T_k
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = 1.0 / t[k];
        for (std::size_t j = std::min(k + 1, n); j >= 1; --j) e[j] += x * e[j - 1];
    }
    double even_alt = 0.0, odd_alt = 0.0, sign = 1.0;
    for (std::size_t k = 0; k <= n; k += 2) {
        even_alt += sign * e[k];
        if (k + 1 <= n) odd_alt += sign * e[k + 1];
        sign = -sign;
    }
    return {even_alt, odd_alt};
}

} // namespace tang
