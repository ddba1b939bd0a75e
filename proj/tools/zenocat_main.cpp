// zenocat command line: rates, wigner-peak, pn-snapshots, wigner-field,
// verify, print-config.  Exit codes: 0 ok, 1 config error, 2 numerical
// failure, 3 verification failure.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "zenocat/cli_ops.hpp"
#include "zenocat/emit.hpp"
#include "zenocat/errors.hpp"
#include "zenocat/verify.hpp"

namespace {

struct FlagOverrides {
    std::string config_path, out_dir, scenario;
    double r = 0.0, alpha = 0.0, n0 = -1.0, theta = 0.0, g = 0.0;
    std::vector<double> omega_c_tau;
    bool svg = false;
    int threads = -1;
    int samples = 0;
};

zenocat::RunConfig resolve(const FlagOverrides& fo) {
    zenocat::RunConfig cfg;
    if (!fo.config_path.empty()) cfg = zenocat::RunConfig::load_file(fo.config_path);
    if (!fo.out_dir.empty()) cfg.out_dir = fo.out_dir;
    if (fo.r > 0.0) cfg.omega_c = fo.r * cfg.omega_0;
    if (fo.alpha > 0.0) cfg.alpha = fo.alpha;
    if (fo.n0 >= 0.0) {
        cfg.thermal_model = "constant_n";
        cfg.n0 = fo.n0;
    }
    if (fo.theta > 0.0) {
        cfg.thermal_model = "bose_einstein";
        cfg.theta = fo.theta;
    }
    if (fo.g > 0.0) cfg.g = fo.g;
    if (!fo.omega_c_tau.empty()) cfg.omega_c_tau = fo.omega_c_tau;
    if (!fo.scenario.empty()) cfg.scenario = fo.scenario;
    if (fo.svg) cfg.svg = true;
    if (fo.threads >= 0) cfg.threads = static_cast<unsigned>(fo.threads);
    if (fo.samples > 1) cfg.samples = fo.samples;
    // round-trip re-validates the merged configuration
    return zenocat::RunConfig::from_text(cfg.to_text());
}

void write_files(const zenocat::RunConfig& cfg, const zenocat::cli::FileSet& files) {
    std::filesystem::create_directories(cfg.out_dir);
    for (const auto& [name, content] : files) {
        const std::string path = cfg.out_dir + "/" + name;
        zenocat::emit::write_text_file(path, content);
        std::cout << "wrote " << path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeno / anti-zeno control of cat-state decoherence in a damped oscillator"};
    app.require_subcommand(1);

    FlagOverrides fo;
    app.add_option("--config", fo.config_path, "configuration file (key = value sections)");
    app.add_option("--out", fo.out_dir, "output directory");
    app.add_option("--r", fo.r, "cutoff ratio r = omega_c/omega_0");
    app.add_option("--omega-c-tau", fo.omega_c_tau, "interruption interval(s), omega_c*tau")
        ->allow_extra_args(false);
    app.add_option("--alpha", fo.alpha, "cat amplitude");
    app.add_option("--n0", fo.n0, "flat occupation (selects the constant_n thermal model)");
    app.add_option("--theta", fo.theta, "temperature (selects the bose_einstein model)");
    app.add_option("--g", fo.g, "coupling constant");
    app.add_option("--scenario", fo.scenario, "shuttered | measured | markov");
    app.add_flag("--svg", fo.svg, "also emit SVG charts");
    app.add_option("--threads", fo.threads, "worker threads (0 = hardware)");
    app.add_option("--samples", fo.samples, "time samples per curve");

    auto* c_rates = app.add_subcommand("rates", "rate sweep table");
    auto* c_peak = app.add_subcommand("wigner-peak", "interference-peak decay curves");
    auto* c_pn = app.add_subcommand("pn-snapshots", "number distributions at snapshots");
    auto* c_field = app.add_subcommand("wigner-field", "full phase-space lattice");
    auto* c_verify = app.add_subcommand("verify", "oracle certification suite");
    auto* c_print = app.add_subcommand("print-config", "print the resolved configuration");
    for (auto* sc : {c_rates, c_peak, c_pn, c_field, c_verify, c_print})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const zenocat::RunConfig cfg = resolve(fo);
        if (c_print->parsed()) {
            std::cout << cfg.to_text();
            return 0;
        }
        if (c_verify->parsed()) {
            const auto report = zenocat::verify::run(cfg);
            std::cout << report.to_string();
            return report.all_pass() ? 0 : 3;
        }
        if (c_rates->parsed()) write_files(cfg, zenocat::cli::cmd_rates(cfg));
        if (c_peak->parsed()) write_files(cfg, zenocat::cli::cmd_wigner_peak(cfg));
        if (c_pn->parsed()) write_files(cfg, zenocat::cli::cmd_pn_snapshots(cfg));
        if (c_field->parsed()) write_files(cfg, zenocat::cli::cmd_wigner_field(cfg));
        return 0;
    } catch (const zenocat::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const zenocat::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
