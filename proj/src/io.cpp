#include "tang/io.hpp"

#include "tang/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace tang::io {

using nlohmann::json;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
} // namespace

TangentialPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rho") || !j["rho"].is_number())
        throw ParameterOutOfRange("polygon JSON needs a numeric 'rho'");
    const double rho = j["rho"].get<double>();
    const bool has_angles = j.contains("angles_deg");
    const bool has_eta = j.contains("tangent_lengths");
    if (has_angles == has_eta)
        throw ParameterOutOfRange(
            "polygon JSON needs exactly one of 'angles_deg' or 'tangent_lengths'");
    const auto& list = j[has_angles ? "angles_deg" : "tangent_lengths"];
    if (!list.is_array()) throw ParameterOutOfRange("polygon list field must be an array");
    std::vector<double> v;
    v.reserve(list.size());
    for (const auto& e : list) {
        if (!e.is_number()) throw ParameterOutOfRange("polygon list entries must be numbers");
        v.push_back(e.get<double>());
    }
    if (has_angles) {
        for (double& a : v) a *= kDeg;
        return from_angles(v, rho);
    }
    return from_tangent_lengths(v, rho);
}

json to_json(const GeometricReport& r) {
    return json{{"L", r.L}, {"A", r.A}, {"i2", r.i2}, {"i4", r.i4}, {"I2", r.I2}, {"d_O", r.d_O}};
}

GeometricReport report_from_json(const json& j) {
    GeometricReport r;
    r.L = j.at("L").get<double>();
    r.A = j.at("A").get<double>();
    r.i2 = j.at("i2").get<double>();
    r.i4 = j.at("i4").get<double>();
    r.I2 = j.at("I2").get<double>();
    r.d_O = j.at("d_O").get<double>();
    return r;
}

json to_json(const BoundsReport& r) {
    json classical = json::object();
    for (const auto& [name, entry] : r.classical) {
        json e{{"kind", entry.kind == BoundKind::lower ? "lower" : "upper"},
               {"applicable", entry.applicable}};
        if (entry.applicable)
            e["value"] = entry.value;
        else
            e["value"] = nullptr;
        classical[name] = e;
    }
    return json{{"q0_minus", r.q0_minus},
                {"q0_plus", r.q0_plus},
                {"q_B", r.q_B},
                {"q_upper_sigma", r.q_upper_sigma},
                {"q1_tangential", r.q1_tangential},
                {"sigma_inf", r.sigma_inf},
                {"sigma_one", r.sigma_one},
                {"classical", classical}};
}

BoundsReport bounds_from_json(const json& j) {
    BoundsReport r;
    r.q0_minus = j.at("q0_minus").get<double>();
    r.q0_plus = j.at("q0_plus").get<double>();
    r.q_B = j.at("q_B").get<double>();
    r.q_upper_sigma = j.at("q_upper_sigma").get<double>();
    r.q1_tangential = j.at("q1_tangential").get<double>();
    r.sigma_inf = j.at("sigma_inf").get<double>();
    r.sigma_one = j.at("sigma_one").get<double>();
    for (const auto& [name, e] : j.at("classical").items()) {
        BoundEntry entry;
        entry.kind = e.at("kind").get<std::string>() == "lower" ? BoundKind::lower : BoundKind::upper;
        entry.applicable = e.at("applicable").get<bool>();
        entry.value = entry.applicable ? e.at("value").get<double>() : std::nan("");
        r.classical[name] = entry;
    }
    return r;
}

json to_json(const FeasibilityResult& r) {
    json j{{"feasible", r.feasible}, {"degenerate", r.degenerate}, {"witness", r.witness}};
    j["eta"] = r.eta;
    if (r.nullspace_shift)
        j["nullspace_shift"] = *r.nullspace_shift;
    else
        j["nullspace_shift"] = nullptr;
    return j;
}

json to_json(const TorsionSolution& r) {
    return json{{"q0_estimate", r.q0_estimate},
                {"resolutions_used", r.resolutions_used},
                {"richardson_error", r.richardson_error},
                {"max_u", r.max_u}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string diagram_csv(const std::vector<DiagramSample>& samples) {
    std::ostringstream os;
    os << "family,n,param1,param2,x,y\n";
    for (const auto& s : samples)
        os << to_string(s.family) << ',' << s.n << ',' << format_double(s.param1) << ','
           << format_double(s.param2) << ',' << format_double(s.x) << ',' << format_double(s.y)
           << '\n';
    return os.str();
}

namespace {

struct Recomputed {
    bool present = false;
    double value = 0;
};

/// Closed-form recomputation of one table cell, where one exists.
Recomputed recompute_cell(TableId id, const std::string& label, const std::string& column) {
    const bool is_inf = label == "inf";
    double A = 0, L = 0, sigma_inf = 0, minus_sigma_1 = 0, rho = 0;
    if (id == TableId::area_pi) {
        A = kPi;
        if (is_inf) {
            rho = 1.0;
            L = 2.0 * kPi;
            sigma_inf = kPi / 8.0;
            minus_sigma_1 = 0.0;
        } else {
            const int n = std::stoi(label);
            const double tau = std::tan(kPi / n);
            L = 2.0 * std::sqrt(n * A * tau);
            sigma_inf = A * A * (3.0 + tau * tau) / (24.0 * n * tau);
            minus_sigma_1 = std::sqrt(std::pow(A, 5) * std::pow(tau, 5) / std::pow(n, 3)) / 90.0;
            rho = std::sqrt(A / (n * tau));
        }
    } else if (id == TableId::circumradius_1_regular) {
        if (is_inf) {
            rho = 1.0;
            A = kPi;
            L = 2.0 * kPi;
            sigma_inf = kPi / 8.0;
            minus_sigma_1 = 0.0;
        } else {
            const int n = std::stoi(label);
            const double tau = std::tan(kPi / n);
            rho = std::cos(kPi / n);
            A = n * rho * rho * tau;
            L = 2.0 * n * rho * tau;
            sigma_inf = A * A * (3.0 + tau * tau) / (24.0 * n * tau);
            minus_sigma_1 = std::sqrt(std::pow(A, 5) * std::pow(tau, 5) / std::pow(n, 3)) / 90.0;
        }
    } else {
        const double sigma = label == "pi/3" ? 2.0 - std::sqrt(3.0) : std::sqrt(2.0) - 1.0;
        const auto poly = isosceles(sigma, Normalization::circumradius(1.0));
        const auto rep = functionals(poly);
        const auto sig = sigma_functionals(rep, poly.rho());
        A = rep.A;
        L = rep.L;
        sigma_inf = sig.sigma_inf;
        minus_sigma_1 = -sig.sigma_one;
        rho = poly.rho();
    }
    if (column == "A" && id != TableId::area_pi) return {true, A};
    if (column == "L") return {true, L};
    if (column == "sigma_inf") return {true, sigma_inf};
    if (column == "minus_sigma_1") return {true, minus_sigma_1};
    if (column == "rho") return {true, rho};
    return {};
}

} // namespace

std::string table_csv(TableId id) {
    const ReferenceTable t = reference_table(id);
    std::ostringstream os;
    os << "row";
    for (const auto& c : t.columns) os << ',' << c;
    for (const auto& c : t.columns) {
        Recomputed probe = recompute_cell(id, t.rows.front().label, c);
        if (probe.present) os << ",recomputed_" << c << ",rel_dev_" << c;
    }
    os << '\n';
    for (const auto& row : t.rows) {
        os << row.label;
        for (double v : row.values) os << ',' << format_double(v);
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            const Recomputed r = recompute_cell(id, row.label, t.columns[c]);
            if (!r.present) continue;
            const double printed = row.values[c];
            const double dev =
                printed != 0.0 ? std::fabs(r.value - printed) / std::fabs(printed)
                               : std::fabs(r.value);
            os << ',' << format_double(r.value) << ',' << format_double(dev);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<double> parse_side_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw ParameterOutOfRange("bad number in side list: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParameterOutOfRange("empty side list");
    return out;
}

} // namespace tang::io
