// Batch verification front end. One subcommand per check suite; each run
// prints a machine-readable JSON report on stdout and a human summary on
// stderr. Exit status: 0 all checks passed, 1 at least one check failed,
// 2 configuration or usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/params_io.hpp"
#include "landau/suites.hpp"

namespace {

landau::suites::RunConfig build_config(const std::string& suite, const std::string& params_path,
                                       const std::string& config_path, const std::string& out_dir,
                                       const std::vector<std::string>& tol_args) {
    landau::suites::RunConfig cfg;
    cfg.suite = suite;
    cfg.out_dir = out_dir;

    if (!params_path.empty()) {
        try {
            cfg.params = landau::load_params_file(params_path);
        } catch (const std::invalid_argument& e) {
            throw landau::suites::ConfigError(e.what());
        }
    }

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw landau::suites::ConfigError("cannot open config: " + config_path);
        try {
            in >> cfg.options;
        } catch (const nlohmann::json::parse_error& e) {
            throw landau::suites::ConfigError(std::string("config: ") + e.what());
        }
    }

    for (const std::string& kv : tol_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw landau::suites::ConfigError("--tol expects name=value, got '" + kv + "'");
        const std::string name = kv.substr(0, eq);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
        } catch (const std::exception&) {
            throw landau::suites::ConfigError("--tol '" + name + "': bad numeric value");
        }
        cfg.tol_overrides[name] = value;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for a charged particle on a plane in a uniform "
                 "transverse magnetic field"};
    app.require_subcommand(1);

    std::string params_path, config_path, out_dir;
    std::vector<std::string> tol_args;

    static const std::map<std::string, std::string> descriptions{
        {"eigencheck", "eigenfunction residuals and invariant eigenvalues for all families"},
        {"commutators", "constants of motion and canonical commutator relations"},
        {"ladder", "degeneracy ladders stay on their Landau level"},
        {"resum", "ladder resummation converges to the displacement"},
        {"phase", "displacement phases against exp(+-i lam1 lam2 / m w hbar)"},
        {"flux", "flux quantization and Hall resistivity at quantized areas"},
        {"classical", "RK4 invariant drift and cyclotron orbit geometry"},
        {"gauge-compare", "gauge covariance of states and trajectories"},
        {"grid-export", "sample a state to CSV and verify bit-exact reimport"},
        {"classical-export", "integrate a trajectory and export it to CSV"}};

    for (const std::string& name : landau::suites::suite_names()) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--params", params_path, "JSON parameter profile (m, q, B, c, hbar)");
        sub->add_option("--config", config_path, "JSON suite options");
        sub->add_option("--out", out_dir, "output directory for exported files");
        sub->add_option("--tol", tol_args,
                        "tolerance override name=value (tighten-only, repeatable)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string suite = app.get_subcommands().front()->get_name();
        const auto cfg = build_config(suite, params_path, config_path, out_dir, tol_args);
        const auto report = landau::suites::run_suite(cfg);

        std::cout << report.to_json().dump(2) << "\n";

        std::size_t failed = 0;
        for (const auto& c : report.checks) {
            if (!c.pass) {
                ++failed;
                std::cerr << "[FAIL] " << c.name << ": " << c.value << " > " << c.bound << "\n";
            }
        }
        std::cerr << suite << ": " << (report.checks.size() - failed) << "/"
                  << report.checks.size() << " checks passed\n";
        return failed == 0 ? 0 : 1;
    } catch (const landau::suites::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
