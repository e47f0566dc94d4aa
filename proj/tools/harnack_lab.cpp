// harnack-lab: experiments around the singular p-Laplacian.
//
//   harnack-lab run suite.cfg [--set key=value]...
//   harnack-lab constants --p 1.5 --gamma1 0.5 --delta 0.1
//   harnack-lab convergence --p 1.5 --levels 4 [--eps-sweep]
//   harnack-lab barenblatt-table --p 1.5 --t 1 > profile.csv

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harnack/config.hpp"
#include "harnack/constants.hpp"
#include "harnack/convergence.hpp"
#include "harnack/errors.hpp"
#include "harnack/exact.hpp"
#include "harnack/experiment.hpp"
#include "harnack/version.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_run(const std::string& path, const std::vector<std::string>& sets) {
    if (sets.empty()) {
        const auto r = harnack::run(path);
        for (const auto& e : r.errors) std::cerr << "error: " << e << "\n";
        std::cout << "rows: " << r.rows.size() << "  exit: " << static_cast<int>(r.code) << "\n";
        return static_cast<int>(r.code);
    }
    harnack::ExperimentConfig cfg;
    try {
        auto flat = harnack::to_flat_map(harnack::load_config(path));
        for (const auto& kv : sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw harnack::ConfigError(kv, "--set expects key=value");
            flat[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        std::string text;
        for (const auto& [k, v] : flat) text += k + " = " + v + "\n";
        cfg = harnack::parse_config_text(text);
    } catch (const harnack::ConfigError& e) {
        std::cerr << "config error [" << e.key() << "]: " << e.what() << "\n";
        return kExitConfig;
    }
    const auto r = harnack::run_experiment(cfg);
    for (const auto& e : r.errors) std::cerr << "error: " << e << "\n";
    std::cout << "rows: " << r.rows.size() << "  exit: " << static_cast<int>(r.code) << "\n";
    return static_cast<int>(r.code);
}

struct ConstantsArgs {
    double p = 1.5;
    double nu = harnack::kDefaultNu;
    double gamma1 = harnack::kDefaultGamma1;
    std::optional<double> delta;
    double c = harnack::kDefaultC;
    std::optional<double> M;
    std::optional<double> T;
};

int cmd_constants(const ConstantsArgs& a) {
    try {
        const double delta = a.delta.value_or(harnack::default_delta(a.p));
        harnack::ConstantChain chain;
        if (a.M || a.T) {
            chain = harnack::compute_chain(a.p, a.nu, a.gamma1, delta, a.c, a.M.value_or(1.0),
                                           a.T.value_or(1.0));
        } else {
            chain = harnack::compute_chain(a.p, a.nu, a.gamma1, delta, a.c);
        }
        std::cout << chain.to_key_value();
        if (!a.delta) std::cout << "delta_source=" << harnack::kDeltaTableVersion << "\n";
        return 0;
    } catch (const harnack::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitConfig;
    }
}

int cmd_convergence(const harnack::ConvergenceOptions& opt, bool eps_sweep) {
    try {
        if (eps_sweep) {
            const auto r = harnack::run_eps_sweep(opt, opt.time_n, opt.time_dt0 / 8.0);
            std::cout << "eps,linf_error\n";
            for (const auto& pt : r.points) std::cout << g17(pt.eps) << "," << g17(pt.error) << "\n";
            std::cout << "relative_change_1e-6_1e-8=" << g17(r.relative_change) << "\n";
            return r.passed ? 0 : 1;
        }
        const auto r = harnack::run_convergence(opt);
        std::cout << "ladder,n_cells,dt,linf_error,observed_order\n";
        auto dump = [](const char* name, const std::vector<harnack::LadderLevel>& lv) {
            for (const auto& l : lv) {
                std::cout << name << "," << l.n_cells << "," << g17(l.dt) << "," << g17(l.error) << ","
                          << (l.order ? g17(*l.order) : "") << "\n";
            }
        };
        dump("space", r.space);
        dump("time", r.time);
        std::cout << "space_order=" << g17(r.space_order) << "\ntime_order=" << g17(r.time_order)
                  << "\nmonotone=" << (r.monotone ? "true" : "false") << "\n";
        return r.passed ? 0 : 1;
    } catch (const harnack::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitConfig;
    } catch (const harnack::StepFailure& e) {
        std::cerr << "solver failure at t=" << e.time() << ": " << e.what() << "\n";
        return kExitSolver;
    }
}

struct TableArgs {
    double p = 1.5;
    double C = 1.0;
    double t0 = 1.0;
    double t = 0.0;
    double x_min = -10.0;
    double x_max = 10.0;
    std::size_t n = 200;
};

int cmd_table(const TableArgs& a) {
    try {
        const harnack::BarenblattParams bp{a.p, a.C, a.t0, 0.0, std::nullopt};
        bp.validate();
        if (a.n < 2 || !(a.x_min < a.x_max)) throw harnack::InvalidInput("need n >= 2 and x-min < x-max");
        std::cout << "x,u\n";
        for (std::size_t i = 0; i < a.n; ++i) {
            const double x = a.x_min + (a.x_max - a.x_min) * static_cast<double>(i) / (a.n - 1);
            std::cout << g17(x) << "," << g17(harnack::barenblatt_eval(bp, x, a.t)) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical lab for the singular p-Laplacian"};
    app.set_version_flag("--version", std::string(harnack::version()));
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    auto* run = app.add_subcommand("run", "Run the scenario x sweep x check cells of a config");
    run->add_option("config", config_path, "Config file (key = value text or JSON)")->required();
    run->add_option("--set", sets, "Override a config key, e.g. --set params.n_cells=1024");

    ConstantsArgs ca;
    auto* cons = app.add_subcommand("constants", "Print the constant chain as key=value lines");
    cons->add_option("--p", ca.p, "Exponent, 1 < p < 2")->capture_default_str();
    cons->add_option("--nu", ca.nu, "Bad-set fraction")->capture_default_str();
    cons->add_option("--gamma1", ca.gamma1, "Cutoff constant")->capture_default_str();
    cons->add_option("--delta", ca.delta, "DeGiorgi delta (default: calibrated table)");
    cons->add_option("--c", ca.c, "Constant c >= 4")->capture_default_str();
    cons->add_option("--M", ca.M, "Level M (adds rho_bar)");
    cons->add_option("--T", ca.T, "Time span T (adds rho_bar)");

    harnack::ConvergenceOptions co;
    bool eps_sweep = false;
    auto* conv = app.add_subcommand("convergence", "Refinement ladder against the exact solution");
    conv->add_option("--p", co.p)->capture_default_str();
    conv->add_option("--levels", co.levels, "Ladder levels (>= 2)")->capture_default_str();
    conv->add_option("--space-n0", co.space_n0)->capture_default_str();
    conv->add_option("--space-dt0", co.space_dt0)->capture_default_str();
    conv->add_option("--time-n", co.time_n)->capture_default_str();
    conv->add_option("--time-dt0", co.time_dt0)->capture_default_str();
    conv->add_option("--eps-reg", co.eps_reg)->capture_default_str();
    conv->add_flag("--eps-sweep", eps_sweep, "Regularization study instead of the ladder");

    TableArgs ta;
    auto* table = app.add_subcommand("barenblatt-table", "Dump exact solution samples as CSV");
    table->add_option("--p", ta.p)->capture_default_str();
    table->add_option("--C", ta.C)->capture_default_str();
    table->add_option("--t0", ta.t0)->capture_default_str();
    table->add_option("--t", ta.t)->capture_default_str();
    table->add_option("--x-min", ta.x_min)->capture_default_str();
    table->add_option("--x-max", ta.x_max)->capture_default_str();
    table->add_option("--n", ta.n)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }
    if (*run) return cmd_run(config_path, sets);
    if (*cons) return cmd_constants(ca);
    if (*conv) return cmd_convergence(co, eps_sweep);
    if (*table) return cmd_table(ta);
    return kExitConfig;
}
