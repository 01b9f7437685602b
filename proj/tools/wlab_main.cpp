// Command-line front end: classify coefficient sets, generate profile
// curves, verify the structural identities on generated surfaces, compute
// bound constants, and export meshes.
//
// Exit codes: 0 success, 1 internal/numeric failure, 2 usage error,
// 3 verification failure. Output is deterministic: no timestamps, reals at
// 17 significant digits. The WLAB_SEED environment variable is reserved but
// unused (every computation is deterministic).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "wlab/bounds.hpp"
#include "wlab/geometry.hpp"
#include "wlab/jsonio.hpp"
#include "wlab/mesh.hpp"
#include "wlab/profile.hpp"
#include "wlab/quadratic_form.hpp"

namespace {

using wlab::jsonio::number;
using wlab::jsonio::quoted;

struct Options {
    wlab::WeingartenData data;
    wlab::IntegratorConfig integrator;
    std::string out;
    int n_v = 0;
    double chart_step = 0.001;
    double c0 = 0.0;
    bool ablate_f = false;
    std::string projection = "drop_x1";
    std::string format = "obj";
};

void add_data_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--eps", opt.data.epsilon, "ambient sign: -1 (H^2 x R) or +1 (S^2 x R)")
        ->required()
        ->check(CLI::IsMember({-1, 1}));
    cmd->add_option("-a", opt.data.a, "coefficient of the intrinsic curvature (nonzero)")
        ->required()
        ->check([](const std::string& s) {
            return std::stod(s) == 0.0 ? std::string("a must be nonzero") : std::string();
        });
    cmd->add_option("-b", opt.data.b, "coefficient of the extrinsic curvature (positive)")
        ->required()
        ->check([](const std::string& s) {
            return std::stod(s) > 0.0 ? std::string() : std::string("b must be positive");
        });
    cmd->add_option("-c", opt.data.c, "right-hand side of a*Ki + b*Ke = c")->required();
}

void add_integrator_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--k-max", opt.integrator.k_max, "truncation radius for noncompact profiles");
    cmd->add_option("--rel-tol", opt.integrator.rel_tol, "integrator relative tolerance");
    cmd->add_option("--abs-tol", opt.integrator.abs_tol, "integrator absolute tolerance");
    cmd->add_option("--max-step", opt.integrator.max_step, "integrator maximum step");
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wlab::error("cannot open output file: " + path);
    out << payload;
}

std::string classification_json(const wlab::Classification& cls) {
    return std::string("{\"schema\":1,\"kind\":") + quoted(wlab::to_string(cls.kind)) +
           ",\"reason\":" + quoted(cls.reason) + "}";
}

int run_classify(const Options& opt) {
    std::cout << classification_json(wlab::classify(opt.data)) << "\n";
    return 0;
}

int run_generate(const Options& opt) {
    const wlab::ProfileCurve profile = wlab::integrate_profile(opt.data, opt.integrator);
    std::ofstream csv(opt.out, std::ios::binary);
    if (!csv) throw wlab::error("cannot open output file: " + opt.out);
    wlab::write_profile_csv(profile, csv);

    std::string json = "{\"schema\":1";
    json += ",\"kind\":" + quoted(wlab::to_string(profile.classification.kind));
    json += ",\"closed\":" + std::string(profile.closed ? "true" : "false");
    json += ",\"k0\":" + (profile.k0 ? number(*profile.k0) : "null");
    json += ",\"samples\":" + std::to_string(profile.samples.size());
    json += ",\"u_end\":" + number(profile.samples.back().u);
    json += ",\"height\":" + number(profile.height());
    json += ",\"csv\":" + quoted(opt.out) + "}";
    std::cout << json << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    const int n_v = opt.n_v > 0 ? opt.n_v : 8;
    const wlab::ProfileCurve profile = wlab::integrate_profile(opt.data, opt.integrator);

    double fi_max = 0.0, arc_max = 0.0;
    for (const wlab::ProfileSample& s : profile.samples) {
        fi_max = std::max(fi_max,
                          std::abs(s.kp * s.kp - wlab::first_integral(s.k, opt.data)));
        arc_max = std::max(arc_max, std::abs(s.kp * s.kp + s.hp * s.hp - 1.0));
    }

    const wlab::RotationalMesh mesh = wlab::immerse(profile, n_v);
    const double gauss_max = wlab::max_gauss_residual(mesh);
    const double wein_max = wlab::max_weingarten_residual(mesh, opt.data);

    const wlab::ConformalChart chart =
        wlab::conformal_chart(profile, opt.data, n_v, opt.chart_step, opt.ablate_f);
    const wlab::IdentityReport ids = wlab::identity_checks(chart, opt.data);
    const double q_sup = wlab::q_sup_norm(chart);
    const double ratio = wlab::principal_ratio_identity(profile, opt.data, opt.ablate_f);

    struct Check {
        const char* name;
        double value;
        double limit;
    };
    const Check checks[] = {
        {"first_integral_preserved", fi_max, 1e-9},
        {"arclength_constraint", arc_max, 1e-10},
        {"gauss_residual", gauss_max, 1e-8},
        {"weingarten_residual", wein_max, 1e-6},
        {"q_sup_norm", q_sup, 1e-6},
        {"ratio_identity", ratio, 1e-6},
        {"nu_identity", ids.nu_identity_residual, 1e-5},
        {"h_identity", ids.h_identity_residual, 1e-5},
        {"q_derivative_bound", ids.bound_violation, 1e-8},
    };

    bool all_pass = true;
    std::string arr;
    for (const Check& c : checks) {
        const bool pass = c.value < c.limit;
        all_pass = all_pass && pass;
        if (!arr.empty()) arr += ',';
        arr += "{\"name\":" + quoted(c.name) + ",\"pass\":" + (pass ? "true" : "false") +
               ",\"residual\":" + number(c.value) + ",\"limit\":" + number(c.limit) + "}";
    }

    std::string json = "{\"schema\":1";
    json += ",\"q_sup_norm\":" + number(q_sup);
    json += ",\"nu_identity_residual\":" + number(ids.nu_identity_residual);
    json += ",\"h_identity_residual\":" + number(ids.h_identity_residual);
    json += ",\"ratio_identity_residual\":" + number(ratio);
    json += ",\"grid_resolution\":" + std::to_string(ids.grid_resolution);
    json += ",\"ablate_f\":" + std::string(opt.ablate_f ? "true" : "false");
    json += ",\"pass\":" + std::string(all_pass ? "true" : "false");
    json += ",\"checks\":[" + arr + "]}";
    std::cout << json << "\n";
    write_output(opt.out, json + "\n");
    return all_pass ? 0 : 3;
}

int run_bounds(const Options& opt) {
    const wlab::BoundsReport rep = wlab::bounds_report(opt.data, opt.c0);
    const std::string json = wlab::to_json(rep);
    std::cout << json << "\n";
    write_output(opt.out, json + "\n");
    return 0;
}

int run_export(const Options& opt) {
    const int n_v = opt.n_v > 0 ? opt.n_v : 64;
    const wlab::ProfileCurve profile = wlab::integrate_profile(opt.data, opt.integrator);
    const wlab::RotationalMesh mesh = wlab::immerse(profile, n_v);
    const wlab::MeshFormat format =
        opt.format == "ply" ? wlab::MeshFormat::PLY : wlab::MeshFormat::OBJ;
    wlab::Projection projection = wlab::Projection::drop_x1;
    if (opt.projection == "poincare") projection = wlab::Projection::poincare;
    if (opt.projection == "stereographic") projection = wlab::Projection::stereographic;

    wlab::export_mesh(mesh, format, projection, opt.out);
    const wlab::TriMesh tri = wlab::triangulate(mesh, projection);
    std::string json = "{\"schema\":1";
    json += ",\"out\":" + quoted(opt.out);
    json += ",\"format\":" + quoted(wlab::to_string(format));
    json += ",\"projection\":" + quoted(wlab::to_string(projection));
    json += ",\"vertices\":" + std::to_string(tri.vertices.size());
    json += ",\"triangles\":" + std::to_string(tri.triangles.size()) + "}";
    std::cout << json << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotational Weingarten-surface toolkit for H^2 x R and S^2 x R"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* classify = app.add_subcommand("classify", "classify a coefficient set");
    add_data_options(classify, opt);

    CLI::App* generate = app.add_subcommand("generate", "integrate the profile curve to CSV");
    add_data_options(generate, opt);
    add_integrator_options(generate, opt);
    generate->add_option("--out", opt.out, "profile CSV path")->required();

    CLI::App* verify = app.add_subcommand("verify", "check the structural identities");
    add_data_options(verify, opt);
    add_integrator_options(verify, opt);
    verify->add_option("--n-v", opt.n_v, "orbit resolution (default 8)");
    verify->add_option("--chart-step", opt.chart_step, "conformal chart resolution");
    verify->add_flag("--ablate-f", opt.ablate_f, "test hook: drop f from the quadratic form");
    verify->add_option("--out", opt.out, "also write the report JSON here");

    CLI::App* bounds = app.add_subcommand("bounds", "compute the bound constants");
    add_data_options(bounds, opt);
    bounds->add_option("--c0", opt.c0, "horizontal estimate constant (default: c1)");
    bounds->add_option("--out", opt.out, "also write the report JSON here");

    CLI::App* exporter = app.add_subcommand("export", "export the rotational mesh");
    add_data_options(exporter, opt);
    add_integrator_options(exporter, opt);
    exporter->add_option("--n-v", opt.n_v, "orbit resolution (default 64)");
    exporter->add_option("--projection", opt.projection, "poincare | drop_x1 | stereographic")
        ->check(CLI::IsMember({"poincare", "drop_x1", "stereographic"}));
    exporter->add_option("--format", opt.format, "obj | ply")
        ->check(CLI::IsMember({"obj", "ply"}));
    exporter->add_option("--out", opt.out, "mesh output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(generate)) return run_generate(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(bounds)) return run_bounds(opt);
        if (app.got_subcommand(exporter)) return run_export(opt);
    } catch (const wlab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
