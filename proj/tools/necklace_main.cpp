// necklace: verification suites and mesh/report generation for the
// catenoid-necklace construction.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/precondition
// error, 3 numeric failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "necklace/equations.hpp"
#include "necklace/gluing.hpp"
#include "necklace/hurwitz.hpp"
#include "necklace/jacobian.hpp"
#include "necklace/mesh_io.hpp"
#include "necklace/report.hpp"
#include "necklace/tower.hpp"
#include "necklace/weierstrass.hpp"

using namespace necklace;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    // Milliseconds resolution keeps the field readable; strip it when
    // comparing reports byte for byte.
    double seconds() const {
        auto d = std::chrono::steady_clock::now() - start;
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
        return static_cast<double>(ms) / 1000.0;
    }
};

void finish(Report& rep, const Timer& timer, const std::string& json_path) {
    rep.seconds = timer.seconds();
    for (const CheckRecord& c : rep.checks)
        std::printf("%-42s %s\n", c.name.c_str(), c.pass ? "pass" : "FAIL");
    std::printf("verdict: %s\n", rep.verdict() ? "pass" : "FAIL");
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw DegenerateInputError("cannot write " + json_path);
        f << rep.to_json() << "\n";
    }
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------- central

int cmd_central(int m, int grid, double tol, const std::string& mesh_path,
                const std::string& csv_path, const std::string& json_path) {
    if (m < 2 || m > 24)
        throw DegenerateInputError("central requires 2 <= m <= 24");
    Timer timer;
    Report rep;
    rep.command = "central";
    rep.echo("m", std::to_string(m));
    rep.echo("grid", std::to_string(grid));
    rep.echo("tol", fmt(tol));

    ParameterVector X = ParameterVector::central(m);
    ResidualVector R = full_residual(X);
    rep.add("full_residual_max_norm", 0.0, R.max_norm(), tol);

    double zmax = 0.0;
    for (Complex z : residual_Z_minus(X)) zmax = std::max(zmax, std::abs(z));
    rep.add("Z_minus_max", 0.0, zmax, tol);

    PeriodResiduals P = residual_periods(X);
    double hamax = 0.0;
    for (Complex h : P.H_A) hamax = std::max(hamax, std::abs(h));
    rep.add("H_A_max", 0.0, hamax, tol);

    GluingConfiguration cfg = central_configuration(m);
    std::vector<double> gv = growth_vector(cfg);
    double gsum = 0.0;
    for (double g : gv) gsum += g;
    rep.add("growth_residue_sum", 0.0, gsum, 1e-10);

    // g^-(z) = -1/z + m z^{m-1} / ((m-1)(z^m - 1)) on a sample circle.
    GluedComponents comp = build_components(cfg);
    double gerr = 0.0;
    for (int s = 0; s < 40; ++s) {
        double th = 2.0 * std::numbers::pi * (s + 0.37) / 40.0;
        Complex z = 0.7 * Complex(std::cos(th), std::sin(th));
        Complex zm = std::pow(z, m);
        Complex closed = -1.0 / z + double(m) * std::pow(z, m - 1) /
                                        (double(m - 1) * (zm - 1.0));
        gerr = std::max(gerr, std::abs(comp.g_minus(z) - closed));
    }
    rep.add("g_minus_closed_form", 0.0, gerr, 1e-10);

    if (!mesh_path.empty() || !csv_path.empty()) {
        RectangularGrid box{Complex(-2.2, -2.2), Complex(2.2, 2.2), grid,
                            grid};
        NamedMesh up{"u_plus", mesh_graph(
                                   [&](Complex z) {
                                       return limit_graph(cfg, GraphSide::Plus, z);
                                   },
                                   box)};
        NamedMesh um{"u_minus", mesh_graph(
                                    [&](Complex z) {
                                        return -limit_graph(cfg, GraphSide::Minus, z);
                                    },
                                    box)};
        std::vector<NamedMesh> pieces{up, um};
        size_t nverts = up.mesh.vertices.size() + um.mesh.vertices.size();
        rep.echo("mesh_vertices", std::to_string(nverts));
        if (!mesh_path.empty()) write_obj(mesh_path, pieces);
        if (!csv_path.empty()) write_curvature_csv(csv_path, pieces);
    }

    finish(rep, timer, json_path);
    return rep.verdict() ? 0 : 1;
}

// ---------------------------------------------------------------- lemma1

int cmd_lemma1(int m, double step, const std::string& json_path) {
    if (m < 2 || m > 8)
        throw DegenerateInputError("lemma1 requires 2 <= m <= 8");
    Timer timer;
    Report rep;
    rep.command = "lemma1";
    rep.echo("m", std::to_string(m));
    rep.echo("step", fmt(step));
    if (step > 1e-3)
        rep.echo("warning",
                 "step coarser than 1e-3; finite-difference consistency "
                 "may degrade");

    JacobianResult J = jacobian_at_central(m, step);
    for (const BlockReport& b : J.blocks) {
        rep.add_flag("block " + b.block_name, b.verdict);
        std::ostringstream sv;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.matrix);
        for (int i = 0; i < svd.singularValues().size(); ++i) {
            if (i) sv << " ";
            sv << fmt(svd.singularValues()(i));
        }
        rep.echo("singular_values " + b.block_name, sv.str());
    }
    rep.add("rank", 5.0 * m - 3.0, J.rank, 0.0);
    rep.add("kernel_dimension", 5.0, J.kernel_dimension, 0.0);
    rep.add_flag("surjective", J.surjective);

    finish(rep, timer, json_path);
    return rep.verdict() ? 0 : 1;
}

// ---------------------------------------------------------------- tower

Schedule parse_schedule(const std::string& text, int N) {
    if (text == "minimal") return Schedule::minimal(N);
    if (text.rfind("geometric:", 0) == 0) {
        int base = std::stoi(text.substr(10));
        if (base < 2) throw DegenerateInputError("geometric base must be >= 2");
        return Schedule::geometric(base, N);
    }
    Schedule s;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        s.m.push_back(std::stoi(tok));
    }
    if (s.m.empty()) throw DegenerateInputError("empty schedule");
    return s;
}

int cmd_tower(const std::string& schedule_text, int N,
              const std::string& csv_path, const std::string& json_path) {
    bool rule = schedule_text == "minimal" ||
                schedule_text.rfind("geometric:", 0) == 0;
    Schedule s = parse_schedule(schedule_text, std::max(N, 2));
    if (!rule) N = static_cast<int>(s.m.size()) + 1;
    if (N < 2) throw DegenerateInputError("tower needs at least 2 ends");

    ScheduleReport val = validate_schedule(s);
    if (!val.valid) {
        std::cerr << "invalid schedule at index " << val.violation_index
                  << ": " << val.reason << "\n";
        throw DegenerateInputError(val.reason);
    }

    Timer timer;
    Report rep;
    rep.command = "tower";
    rep.echo("schedule", schedule_text);
    rep.echo("steps", std::to_string(N));

    AsymptoticsReport a = asymptotics(s, N);
    rep.add_flag("schedule_valid", true);
    if (schedule_text == "minimal" && N >= 5)
        rep.add("c_5(S_5)", 2.1875, a.c_n_of_S_n[3].convert_to<double>(),
                0.0);
    rep.add_flag("sqrt_growth_bound", a.sqrt_bound_ok);
    rep.echo("sqrt_ratio_max", fmt(a.sqrt_ratio_max));
    rep.add_flag("curvature_certificates_exceed_n_minus_1",
                 a.certificates_exceed_n_minus_1);
    rep.echo("series_verdict", a.series.verdict + " (" + a.series.test + ")");
    rep.add_flag("series_classified", a.series.verdict != "inconclusive");

    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw DegenerateInputError("cannot write " + csv_path);
        f << "n,m_n,c_n_S_n,c_n_S_inf,curvature_certificate,partial_sum\n";
        for (size_t j = 0; j < a.c_n_of_S_n.size(); ++j) {
            int n = static_cast<int>(j) + 2;
            f << n << "," << s.m[j] << ","
              << fmt(a.c_n_of_S_n[j].convert_to<double>()) << ","
              << fmt(a.c_n_of_S_inf[j].convert_to<double>()) << ","
              << fmt(a.curvature_certificates[j].convert_to<double>()) << ","
              << fmt(a.series.partial_sums[j]) << "\n";
        }
    }

    finish(rep, timer, json_path);
    return rep.verdict() ? 0 : 1;
}

// ---------------------------------------------------------------- hurwitz

int cmd_hurwitz(double t, const std::string& json_path) {
    if (!(t > 0.0 && t <= 0.5))
        throw DegenerateInputError("hurwitz requires 0 < t <= 0.5");
    Timer timer;
    Report rep;
    rep.command = "hurwitz";
    rep.echo("t", fmt(t));

    Polynomial f({Complex(0.0), Complex(0.0), Complex(0.0), Complex(4.0 * t),
                  Complex(1.0)});
    Complex alpha = std::pow(27.0, 0.25) *
                    std::exp(Complex(0.0, std::numbers::pi / 4.0));
    Polynomial g({Complex(0.0), Complex(0.0), 4.0 * t * t * alpha * alpha,
                  4.0 * t * alpha, Complex(1.0)});

    rep.add_flag("same_branching_values", same_branching_values(f, g, 1e-10));
    rep.add_flag("profiles_not_isomorphic", !isomorphic_profiles(f, g));

    BranchingProfile pf = branching_profile(f);
    double nonzero = 0.0;
    for (Complex v : pf.critical_values)
        if (std::abs(v) > 1e-13) nonzero = v.real();
    double expect = -27.0 * t * t * t * t;
    rep.add("nonzero_critical_value", expect, nonzero,
            1e-12 * std::max(1.0, std::abs(expect)));
    std::printf("critical values: {0, 0, %.17g}\n", expect);
    std::printf("note: the nonzero common branching value is -27 t^4 "
                "(f(-3t) = -27 t^4), not -3t\n");

    // Marked vs unmarked: z^3 + t z vs z^3 + t j z, j a primitive cube root.
    Complex j = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    Polynomial c1({Complex(0.0), Complex(t), Complex(0.0), Complex(1.0)});
    Polynomial c2({Complex(0.0), t * j, Complex(0.0), Complex(1.0)});
    rep.add_flag("cubic_pair_profile_isomorphic", isomorphic_profiles(c1, c2));
    CoveringLocalModel m1{3, Complex(0.0), {Complex(0.0), Complex(t)}};
    CoveringLocalModel m2{3, Complex(0.0), {Complex(0.0), t * j}};
    rep.add_flag("cubic_pair_marked_unequal", !marked_equal(m1, m2, 1e-9));

    finish(rep, timer, json_path);
    return rep.verdict() ? 0 : 1;
}

// ---------------------------------------------------------------- sketch

int cmd_sketch(int m, double t, int grid, const std::string& mesh_path,
               const std::string& csv_path, const std::string& json_path) {
    if (m < 2 || m > 24)
        throw DegenerateInputError("sketch requires 2 <= m <= 24");
    if (!(t > 0.0 && t <= 0.5))
        throw DegenerateInputError("sketch requires 0 < t <= 0.5");
    if (mesh_path.empty())
        throw DegenerateInputError("sketch requires --mesh");
    Timer timer;
    Report rep;
    rep.command = "sketch";
    rep.echo("m", std::to_string(m));
    rep.echo("t", fmt(t));
    rep.echo("grid", std::to_string(grid));
    rep.echo("illustrative",
             "assembled from the limit pieces via the affine rescaling "
             "(x1,x2,x3) -> (-2t x1, -2t x2, x3); not a true minimal "
             "surface for t > 0");

    // Catenoid neck, horizontally shrunk by the rescaling factor.
    AnnularGrid neck{0.25, 4.0, grid, grid, Complex(0.0)};
    SurfaceMesh cat = mesh_surface(catenoid(), neck);
    for (auto& v : cat.vertices) {
        v[0] *= -2.0 * t;
        v[1] *= -2.0 * t;
    }

    GluingConfiguration cfg = central_configuration(m);
    RectangularGrid box{Complex(-2.2, -2.2), Complex(2.2, 2.2), grid, grid};
    SurfaceMesh up = mesh_graph(
        [&](Complex z) { return limit_graph(cfg, GraphSide::Plus, z); }, box);
    SurfaceMesh um = mesh_graph(
        [&](Complex z) { return -limit_graph(cfg, GraphSide::Minus, z); },
        box);

    std::vector<NamedMesh> pieces{{"catenoid_neck", cat},
                                  {"u_plus", up},
                                  {"u_minus", um}};
    write_obj(mesh_path, pieces);
    if (!csv_path.empty()) write_curvature_csv(csv_path, pieces);

    size_t nverts =
        cat.vertices.size() + up.vertices.size() + um.vertices.size();
    rep.echo("mesh_vertices", std::to_string(nverts));
    rep.add_flag("meshes_written", nverts > 0);

    finish(rep, timer, json_path);
    return rep.verdict() ? 0 : 1;
}

// ------------------------------------------------------------ entry point

// Plain key=value config support: read --config <file> and append
// "--key value" for every key not already given on the command line
// (flags override the file).
std::vector<std::string> with_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    auto kv = parse_config_file(config_path);
    for (const auto& [key, value] : kv) {
        std::string flag = "--" + key;
        bool present = false;
        for (const std::string& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"necklace: verification and construction toolkit"};
    app.require_subcommand(1);

    int m = 3;
    double t = 0.1;
    double tol = 1e-9;
    double step = 1e-6;
    int grid = 24;
    int steps = 10;
    std::string schedule = "minimal";
    std::string out, mesh, json, config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", json, "write the JSON report here");
        sub->add_option("--out", out, "write the CSV artifact here");
        sub->add_option("--config", config,
                        "key=value config file (flags override)");
    };

    CLI::App* central = app.add_subcommand(
        "central", "verify the central gluing configuration");
    central->add_option("--m", m, "number of necks (2..24)");
    central->add_option("--grid", grid, "mesh grid resolution per side");
    central->add_option("--tol", tol, "residual tolerance");
    central->add_option("--mesh", mesh, "write limit-graph OBJ meshes here");
    add_common(central);

    CLI::App* lemma1 = app.add_subcommand(
        "lemma1", "certify the Jacobian blocks at the central value");
    lemma1->add_option("--m", m, "number of necks (2..8)");
    lemma1->add_option("--step,--tol", step, "finite-difference step");
    add_common(lemma1);

    CLI::App* tower = app.add_subcommand(
        "tower", "validate a schedule and iterate the growth recursion");
    tower->add_option("--schedule", schedule,
                      "minimal | geometric:B | comma list (e.g. 3,5,7,9)");
    tower->add_option("--steps", steps, "largest number of ends N");
    add_common(tower);

    CLI::App* hurwitz = app.add_subcommand(
        "hurwitz", "branched-covering demonstration for the quartic pair");
    hurwitz->add_option("--t", t, "deformation parameter (0 < t <= 0.5)");
    add_common(hurwitz);

    CLI::App* sketch = app.add_subcommand(
        "sketch", "assemble an illustrative figure mesh (catenoid + graphs)");
    sketch->add_option("--m", m, "number of necks");
    sketch->add_option("--t", t, "rescaling parameter");
    sketch->add_option("--grid", grid, "mesh grid resolution per side");
    sketch->add_option("--mesh", mesh, "output OBJ path (required)");
    add_common(sketch);

    std::vector<std::string> args = with_config(argc, argv);
    try {
        // CLI11 parses reversed argument vectors.
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(central))
            return cmd_central(m, grid, tol, mesh, out, json);
        if (app.got_subcommand(lemma1)) return cmd_lemma1(m, step, json);
        if (app.got_subcommand(tower))
            return cmd_tower(schedule, steps, out, json);
        if (app.got_subcommand(hurwitz)) return cmd_hurwitz(t, json);
        if (app.got_subcommand(sketch))
            return cmd_sketch(m, t, grid, mesh, out, json);
    } catch (const EmbeddednessConditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoisyJacobianError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
