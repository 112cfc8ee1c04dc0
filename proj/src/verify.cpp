#include "tang/verify.hpp"

#include "tang/torsion.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace tang {

namespace {

constexpr double kPi = std::numbers::pi;

struct Case {
    std::string name;
    ConvexDomain domain;
    GeometricReport report;
    double rho;
    std::optional<double> spot;
};

std::vector<Case> regression_set() {
    std::vector<Case> cases;
    cases.push_back({"disk rho=1", make_disk_domain(1.0), disk_functionals(1.0), 1.0, kPi / 8.0});

    for (int n = 3; n <= 8; ++n) {
        const auto poly = regular_ngon(n, Normalization::area(kPi));
        std::optional<double> spot;
        if (n == 3) spot = kPi * kPi / (20.0 * std::sqrt(3.0));
        if (n == 4) spot = 0.34687; // area-pi square, published value
        std::ostringstream name;
        name << "regular n=" << n << " area=pi";
        cases.push_back({name.str(), make_domain(poly), functionals(poly), poly.rho(), spot});
    }

    const double sigmas[] = {0.1, 2.0 - std::sqrt(3.0), std::sqrt(2.0) - 1.0, 0.7};
    const char* signames[] = {"sigma=0.1", "sigma=2-sqrt3", "sigma=sqrt2-1", "sigma=0.7"};
    for (int k = 0; k < 4; ++k) {
        const auto poly = isosceles(sigmas[k], std::sqrt(3.0));
        std::optional<double> spot;
        if (k == 1) spot = std::sqrt(3.0) / 20.0;
        if (k == 2) spot = 0.07827; // right isosceles, published value
        cases.push_back({std::string("isosceles ") + signames[k] + " area=sqrt3",
                         make_domain(poly), functionals(poly), poly.rho(), spot});
    }

    for (double tau : {1.0, 2.0, 4.0}) {
        const auto poly = rhombus(tau, Normalization::area(kPi));
        std::ostringstream name;
        name << "rhombus tau=" << tau << " area=pi";
        cases.push_back({name.str(), make_domain(poly), functionals(poly), poly.rho(), std::nullopt});
    }
    return cases;
}

} // namespace

std::vector<VerifyRow> run_bound_verification(double rel_err, std::ostream* out) {
    std::vector<VerifyRow> rows;
    for (const auto& c : regression_set()) {
        VerifyRow row;
        row.name = c.name;
        const SigmaPair sig = sigma_functionals(c.report, c.rho);
        const auto [qm, qp] = q0_roots_from_sigmas(c.report.A, c.report.L, sig);
        row.q0_minus = qm;
        row.q0_plus = qp;
        row.q_B = c.rho * c.rho * c.report.A / 8.0;
        row.min_upper = std::min({sig.sigma_inf, c.report.A * c.report.A / (8.0 * kPi),
                                  c.rho * c.rho * c.report.A / 3.0});
        const TorsionSolution ts = solve_torsion(c.domain, rel_err);
        row.q0_fd = ts.q0_estimate;
        row.fd_err = ts.richardson_error;
        row.spot_expected = c.spot;

        const double lo_band = row.q0_fd * (1.0 - row.fd_err);
        const double hi_band = row.q0_fd * (1.0 + row.fd_err);
        std::ostringstream detail;
        bool ok = true;
        if (!(row.q_B <= qm * (1.0 + 1e-12))) {
            ok = false;
            detail << "q_B > Q0-; ";
        }
        if (!(qm <= hi_band)) {
            ok = false;
            detail << "Q0- above solver band; ";
        }
        if (!(lo_band <= row.min_upper)) {
            ok = false;
            detail << "solver band above upper bounds; ";
        }
        if (!(row.min_upper <= qp * (1.0 + 1e-12))) {
            ok = false;
            detail << "upper bounds above Q0+; ";
        }
        if (c.spot && std::fabs(row.q0_fd - *c.spot) > 0.01 * *c.spot) {
            ok = false;
            detail << "spot value off by more than 1%; ";
        }
        row.pass = ok;
        row.detail = detail.str();
        if (out) {
            (*out) << (ok ? "[PASS] " : "[FAIL] ") << row.name << ": q_B=" << row.q_B
                   << " Q0-=" << row.q0_minus << " Q0(fd)=" << row.q0_fd << "(±" << row.fd_err
                   << ") minU=" << row.min_upper << " Q0+=" << row.q0_plus;
            if (!row.detail.empty()) (*out) << "  " << row.detail;
            (*out) << '\n';
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace tang
