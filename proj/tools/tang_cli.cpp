#include "tang/bounds.hpp"
#include "tang/errors.hpp"
#include "tang/feasibility.hpp"
#include "tang/io.hpp"
#include "tang/polygon.hpp"
#include "tang/shapes.hpp"
#include "tang/torsion.hpp"
#include "tang/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

struct InputSource {
    std::string path;
    std::string inline_json;
};

json load_input(const InputSource& in) {
    if (in.path.empty() == in.inline_json.empty())
        throw tang::ParameterOutOfRange("provide exactly one of --input or --json");
    if (!in.inline_json.empty()) return json::parse(in.inline_json);
    std::ifstream f(in.path);
    if (!f) throw tang::ParameterOutOfRange("cannot open input file '" + in.path + "'");
    return json::parse(f);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw tang::ParameterOutOfRange("cannot open output file '" + output_path + "'");
    f << text;
}

/// Bounds applicability tag inferred from the polygon: triangles are tagged,
/// and isosceles triangles get their sigma so the cubic trial bound applies.
tang::ShapeTag infer_tag(const tang::TangentialPolygon& poly) {
    const auto t = poly.t_values();
    if (t.size() != 3) return {tang::ShapeFamily::random_tangential, 0.0, 0.0};
    for (int apex = 0; apex < 3; ++apex) {
        const double b1 = t[(apex + 1) % 3], b2 = t[(apex + 2) % 3];
        if (std::fabs(b1 - b2) <= 1e-12 * (b1 + b2)) {
            const double alpha = 2.0 * std::atan2(1.0, t[apex]);
            return {tang::ShapeFamily::isosceles_sigma, std::tan(alpha / 4.0), 0.0};
        }
    }
    return {tang::ShapeFamily::triangle_angles, 0.0, 0.0};
}

int run(int argc, char** argv) {
    CLI::App app{"tangential-polygon torsional rigidity toolkit"};
    app.require_subcommand(1);

    InputSource in;
    std::string output;
    double rel_err = 5e-3;
    int samples = 256;
    std::uint64_t seed = 1;
    std::string table_id, family, axes = "L_over_dO";
    int ngon = 4;
    double disk_rho = 0.0;
    double concentration = 1.0;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) {
            cmd->add_option("--input", in.path, "polygon JSON file");
            cmd->add_option("--json", in.inline_json, "inline polygon JSON");
        }
        cmd->add_option("--output", output, "output file (stdout when omitted)");
    };

    auto* poly_cmd = app.add_subcommand("poly", "geometric functionals of a polygon");
    add_io(poly_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "torsional-rigidity bounds report");
    add_io(bounds_cmd, true);

    auto* feas_cmd = app.add_subcommand("feasible", "side-length feasibility");
    std::string sides_csv;
    feas_cmd->add_option("--sides", sides_csv, "comma-separated side lengths")->required();
    add_io(feas_cmd, false);

    auto* solve_cmd = app.add_subcommand("solve", "finite-difference torsion solve");
    add_io(solve_cmd, true);
    solve_cmd->add_option("--rel-err", rel_err, "target relative error (>= 1e-4)");
    solve_cmd->add_option("--disk", disk_rho, "solve the disk of this inradius instead");

    auto* table_cmd = app.add_subcommand("table", "reference table as CSV with recomputation");
    table_cmd->add_option("--id", table_id, "area_pi | circumradius_1_regular | circumradius_1_isosceles")
        ->required();
    add_io(table_cmd, false);

    auto* diagram_cmd = app.add_subcommand("diagram", "diagram samples as CSV");
    diagram_cmd
        ->add_option("--family", family,
                     "one_cap | two_cap_lower | bcs03_upper | blundon | bicentric_quad | random")
        ->required();
    diagram_cmd->add_option("--samples", samples, "sample count");
    diagram_cmd->add_option("--seed", seed, "random seed (random family)");
    diagram_cmd->add_option("--n", ngon, "vertex count (random family)");
    diagram_cmd->add_option("--concentration", concentration, "Dirichlet concentration (random family)");
    diagram_cmd->add_option("--axes", axes, "axes tag for the random family");
    add_io(diagram_cmd, false);

    auto* verify_cmd = app.add_subcommand("verify", "bound-sandwich regression suite");
    verify_cmd->add_option("--rel-err", rel_err, "solver target relative error");
    add_io(verify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (poly_cmd->parsed()) {
        const auto poly = tang::io::polygon_from_json(load_input(in));
        emit(tang::io::to_json(tang::functionals(poly)).dump(2), output);
        return 0;
    }
    if (bounds_cmd->parsed()) {
        const auto poly = tang::io::polygon_from_json(load_input(in));
        const auto report = tang::functionals(poly);
        emit(tang::io::to_json(tang::bounds_report(report, poly.rho(), infer_tag(poly))).dump(2),
             output);
        return 0;
    }
    if (feas_cmd->parsed()) {
        const auto sides = tang::io::parse_side_list(sides_csv);
        const auto res = tang::solve_tangent_lengths(sides);
        emit(tang::io::to_json(res).dump(2), output);
        if (!res.feasible) {
            std::cerr << "{\"infeasible\":true,\"witness\":\"" << res.witness << "\"}\n";
            return 2;
        }
        return 0;
    }
    if (solve_cmd->parsed()) {
        tang::TorsionSolution sol;
        if (disk_rho > 0.0)
            sol = tang::solve_torsion_disk(disk_rho, rel_err);
        else
            sol = tang::solve_torsion(tang::io::polygon_from_json(load_input(in)), rel_err);
        emit(tang::io::to_json(sol).dump(2), output);
        return 0;
    }
    if (table_cmd->parsed()) {
        emit(tang::io::table_csv(tang::table_id_from_string(table_id)), output);
        return 0;
    }
    if (diagram_cmd->parsed()) {
        std::vector<tang::DiagramSample> rows;
        if (family == "one_cap" || family == "two_cap_lower" || family == "bcs03_upper") {
            const auto kind = family == "one_cap" ? tang::CurveKind::one_cap
                              : family == "two_cap_lower" ? tang::CurveKind::two_cap_lower
                                                          : tang::CurveKind::bcs03_upper;
            rows = tang::cap_curve(kind, samples);
        } else if (family == "blundon") {
            auto [lo, hi] = tang::blundon_curves(samples);
            rows = std::move(lo);
            rows.insert(rows.end(), hi.begin(), hi.end());
        } else if (family == "bicentric_quad") {
            auto [lo, hi] = tang::bicentric_quad_envelope(samples);
            rows = std::move(lo);
            rows.insert(rows.end(), hi.begin(), hi.end());
        } else if (family == "random") {
            const auto polys = tang::sample_random(ngon, samples, seed,
                                                   tang::Normalization::inradius(1.0), concentration);
            rows.reserve(polys.size());
            for (std::size_t i = 0; i < polys.size(); ++i) {
                const auto rep = tang::functionals(polys[i]);
                tang::DiagramSample s;
                s.family = tang::ShapeFamily::random_tangential;
                s.n = ngon;
                s.param1 = static_cast<double>(i);
                s.axes = axes;
                if (axes == "rho_over_dO_x_L_over_rho") {
                    s.x = rep.L / polys[i].rho();
                    s.y = polys[i].rho() / rep.d_O;
                } else { // default L_over_dO
                    s.x = rep.L / rep.d_O;
                    s.y = polys[i].rho() / rep.d_O;
                }
                rows.push_back(std::move(s));
            }
        } else {
            throw tang::UnknownCurve("diagram family '" + family + "'");
        }
        emit(tang::io::diagram_csv(rows), output);
        return 0;
    }
    if (verify_cmd->parsed()) {
        std::ostringstream os;
        const auto rows = tang::run_bound_verification(rel_err, &os);
        emit(os.str(), output);
        bool all = true;
        for (const auto& r : rows) all = all && r.pass;
        if (!all) {
            std::cerr << "{\"verification_failed\":true}\n";
            return 2;
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tang::Error& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 1;
    }
}
