#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincat/errors.hpp"
#include "spincat/sweep.hpp"
#include "spincat/verify.hpp"

namespace {

using namespace spincat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

int write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    file << payload;
    return kExitOk;
}

json xi_cell(const XiValue& v) {
    switch (v.kind()) {
        case XiValue::Kind::Finite: return v.value();
        case XiValue::Kind::Infinite: return "inf";
        default: return "degenerate";
    }
}

struct SweepFlags {
    int twice_j = 0;
    std::string theta = "0";
    double eta_min = 0.05;
    double eta_max = 3.0;
    int steps = 120;
    std::string eta_scale = "linear";
    std::string format = "csv";
    std::string out = "-";

    void attach(CLI::App* cmd, const char* default_theta) {
        theta = default_theta;
        cmd->add_option("--twice-j", twice_j, "2j (integer; odd means half-integer spin)")
            ->required();
        cmd->add_option("--theta", theta,
                        "comma-separated relative phases: 0, pi, pi/2, 3pi/4, or radians");
        cmd->add_option("--eta-min", eta_min, "lower |eta| bound");
        cmd->add_option("--eta-max", eta_max, "upper |eta| bound");
        cmd->add_option("--steps", steps, "number of |eta| grid points");
        cmd->add_option("--eta-scale", eta_scale, "linear|log")
            ->check(CLI::IsMember({"linear", "log"}));
        cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out, "output path, '-' for stdout");
    }

    sweep::SweepConfig to_config() const {
        sweep::SweepConfig config;
        config.twice_j = twice_j;
        config.theta_list = sweep::parse_theta_list(theta);
        config.eta_min = eta_min;
        config.eta_max = eta_max;
        config.steps = steps;
        config.eta_scale =
            eta_scale == "log" ? sweep::EtaScale::Log : sweep::EtaScale::Linear;
        config.format =
            format == "json" ? sweep::OutputFormat::Json : sweep::OutputFormat::Csv;
        config.out_path = out;
        return config;
    }
};

int run_g2_sweep_cmd(const SweepFlags& flags, const std::string& args) {
    sweep::SweepConfig config = flags.to_config();
    if (const std::string err = sweep::validate_config(config, false); !err.empty()) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    const auto rows = sweep::run_g2_sweep(config);
    std::ostringstream os;
    if (config.format == sweep::OutputFormat::Csv)
        sweep::write_g2_csv(os, rows, args);
    else
        sweep::write_g2_json(os, rows, config, args);
    return write_output(config.out_path, os.str());
}

int run_squeezing_sweep_cmd(const SweepFlags& flags, const std::string& args) {
    sweep::SweepConfig config = flags.to_config();
    if (const std::string err = sweep::validate_config(config, true); !err.empty()) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    const auto rows = sweep::run_squeezing_sweep(config);
    std::ostringstream os;
    if (config.format == sweep::OutputFormat::Csv)
        sweep::write_squeezing_csv(os, rows, args);
    else
        sweep::write_squeezing_json(os, rows, config, args);
    return write_output(config.out_path, os.str());
}

int run_verify_cmd(const std::string& preset_name, double tolerance) {
    VerifyOptions options;
    options.preset = parse_grid_preset(preset_name);
    if (!(tolerance > 0.0)) {
        std::cerr << "error: tolerance must be positive\n";
        return kExitUsage;
    }
    options.rtol = tolerance;
    const VerifyReport report = run_verification(options);
    std::cout << "verification grid: " << report.points << " parameter points, rtol "
              << sweep::format_double(options.rtol) << ", atol "
              << sweep::format_double(options.rtol / 10.0) << "\n";
    for (const auto& q : report.quantities) {
        std::cout << (q.failures == 0 ? "  ok   " : "  FAIL ") << q.name << ": max abs dev "
                  << sweep::format_double(q.max_abs_dev) << ", max rel dev "
                  << sweep::format_double(q.max_rel_dev) << " (" << q.samples << " samples";
        if (q.failures > 0) std::cout << ", " << q.failures << " over tolerance";
        std::cout << ")\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? kExitOk : kExitVerifyFail;
}

int run_state_info_cmd(int twice_j, const std::string& eta_token, const std::string& theta_token) {
    Complex eta;
    double theta;
    try {
        eta = sweep::parse_eta(eta_token);
        theta = sweep::parse_theta(theta_token);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const SscsParams params{twice_j, eta, theta};
    json doc;
    doc["params"] = {{"twice_j", twice_j},
                     {"eta", {{"re", eta.real()}, {"im", eta.imag()}}},
                     {"theta", theta}};
    try {
        const SpinSpace space(twice_j);
        const SpinState state = sscs(space, params);

        auto& amps = doc["amplitudes"] = json::array();
        for (int n = 0; n < state.dimension(); ++n) {
            const Complex a = state.amplitude(n);
            amps.push_back({a.real(), a.imag()});
        }
        const NMoments nm = n_moments(params);
        doc["n_moments"] = {nm.n1, nm.n2, nm.n3, nm.n4};
        try {
            doc["g2"] = g2(params);
        } catch (const UndefinedCorrelationError&) {
            doc["g2"] = nullptr;
        }
        const MomentSet m = cartesian_moments(params);
        doc["mean_spin"] = {m.jx, m.jy, m.jz};
        const XiTriple xi = xi_xyz_closedform(params);
        doc["xi2"] = {{"x", xi_cell(xi.x)}, {"y", xi_cell(xi.y)}, {"z", xi_cell(xi.z)}};
        try {
            const Complex cross = sscs_cross_overlap(params);
            doc["cross_overlap"] = {cross.real(), cross.imag()};
        } catch (const DegenerateSuperpositionError&) {
            doc["cross_overlap"] = nullptr;
        }
    } catch (const DegenerateSuperpositionError& e) {
        json err;
        err["error"] = {{"code", "degenerate_superposition"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitDegenerate;
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int run_critical_eta_cmd(int twice_j) {
    try {
        const double eta_c = find_critical_eta(twice_j, std::numbers::pi);
        const double peak = odd_scs_peak_xi_y2(twice_j, eta_c);
        json doc;
        doc["twice_j"] = twice_j;
        doc["theta"] = "pi";
        doc["eta_c"] = eta_c;
        doc["peak_xi_y2"] = peak;
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoCrossingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superposed spin coherent states: correlation and squeezing numerics"};
    app.set_version_flag("--version", std::string("spincat ") + SPINCAT_VERSION);
    app.require_subcommand(1);
    const std::string args = join_args(argc, argv);

    SweepFlags g2_flags;
    auto* g2_cmd = app.add_subcommand("g2-sweep",
                                      "second-order correlation over an |eta| grid");
    g2_flags.attach(g2_cmd, "0,pi/2,pi");

    SweepFlags sq_flags;
    auto* sq_cmd = app.add_subcommand("squeezing-sweep",
                                      "xi_x^2 / xi_y^2 over an |eta| grid (theta in {0, pi})");
    sq_flags.attach(sq_cmd, "0");

    std::string preset = "default";
    double tolerance = 1e-9;
    auto* verify_cmd =
        app.add_subcommand("verify", "closed forms vs brute-force matrix oracle on a grid");
    verify_cmd->add_option("--grid-preset", preset, "small|default|large");
    verify_cmd->add_option("--tolerance", tolerance, "relative tolerance (absolute = rtol/10)");

    int info_twice_j = 0;
    std::string info_eta = "0";
    std::string info_theta = "0";
    auto* info_cmd = app.add_subcommand("state-info", "inspect one superposition state as JSON");
    info_cmd->add_option("--twice-j", info_twice_j, "2j")->required();
    info_cmd->add_option("--eta", info_eta, "eta as 'r' or 'r@phi' (polar, radians)");
    info_cmd->add_option("--theta", info_theta, "relative phase");

    int crit_twice_j = 0;
    auto* crit_cmd = app.add_subcommand(
        "critical-eta", "squeezing onset |eta_c| of the odd superposition (half-integer j)");
    crit_cmd->add_option("--twice-j", crit_twice_j, "2j, odd")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (g2_cmd->parsed()) return run_g2_sweep_cmd(g2_flags, args);
        if (sq_cmd->parsed()) return run_squeezing_sweep_cmd(sq_flags, args);
        if (verify_cmd->parsed()) return run_verify_cmd(preset, tolerance);
        if (info_cmd->parsed()) return run_state_info_cmd(info_twice_j, info_eta, info_theta);
        if (crit_cmd->parsed()) return run_critical_eta_cmd(crit_twice_j);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
