#include "harnack/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "harnack/cutoff.hpp"
#include "harnack/errors.hpp"
#include "harnack/exact.hpp"
#include "harnack/flux.hpp"
#include "harnack/svg.hpp"
#include "harnack/verifier.hpp"
#include "harnack/weak_form.hpp"

namespace harnack {

namespace {

using nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string g17(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string chain_key(double p, double M) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "p=%.17g,M=%.17g", p, M);
    return buf;
}

bool wants(const ExperimentConfig& c, const std::string& check) {
    return std::find(c.checks.begin(), c.checks.end(), check) != c.checks.end();
}

double detail_or_nan(const CheckReport& r, const std::string& key) {
    const auto it = r.details.find(key);
    return it == r.details.end() ? kNaN : it->second;
}

struct ErrorRecord {
    ExitCode code = ExitCode::ok;
    ordered_json record;
};

/// Everything one (p, M) cell produced.
struct CellOutcome {
    std::vector<ResultRow> rows;
    ConstantChain chain;
    std::vector<ErrorRecord> errors;
    /// s -> |A_s| / (T/2) at the first rho of the sweep.
    std::vector<std::pair<int, double>> bad_set;
};

std::vector<std::pair<double, double>> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("scenario.u0_table", "scenario.u0_table: cannot read " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        char* end = nullptr;
        const double x = std::strtod(line.c_str(), &end);
        if (end == line.c_str()) continue;  // header
        const double u = std::strtod(line.c_str() + comma + 1, nullptr);
        if (!std::isfinite(x) || !std::isfinite(u) || u < 0.0) {
            throw ConfigError("scenario.u0_table", "scenario.u0_table: bad row '" + line + "'");
        }
        rows.emplace_back(x, u);
    }
    std::sort(rows.begin(), rows.end());
    if (rows.size() < 2) throw ConfigError("scenario.u0_table", "scenario.u0_table: need >= 2 rows");
    return rows;
}

double interpolate(const std::vector<std::pair<double, double>>& tab, double x) {
    if (x <= tab.front().first) return tab.front().second;
    if (x >= tab.back().first) return tab.back().second;
    const auto it = std::lower_bound(tab.begin(), tab.end(), std::make_pair(x, -kNaN));
    const auto& [x1, u1] = *it;
    const auto& [x0, u0] = *(it - 1);
    return x1 == x0 ? u1 : u0 + (u1 - u0) * (x - x0) / (x1 - x0);
}

ResultRow make_row(const std::string& name, double p, double M, double rho_ratio,
                   CheckReport rep, const std::string& key) {
    return {name, p, M, rho_ratio, std::move(rep), key};
}

CheckReport hypothesis_row(const std::string& name, const std::string& what) {
    CheckReport r;
    r.name = name;
    r.passed = false;
    r.margin = kNaN;
    r.notes["hypothesis"] = what;
    return r;
}

/// Least-squares slope of y against x.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

/// Far-field profile samples of the Barenblatt solution at s = 1.
std::pair<std::vector<double>, std::vector<double>> decay_samples(double p, double C, double lo,
                                                                  double hi) {
    const BarenblattParams bp{p, C, 1.0, 0.0, std::nullopt};
    std::vector<double> x, u;
    const int n = 400;
    for (int i = 0; i < n; ++i) {
        const double xi = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
        x.push_back(xi);
        u.push_back(barenblatt_eval(bp, xi, 0.0));
    }
    return {x, u};
}

CheckReport decay_exponent_check(const ExperimentConfig& c, double p) {
    const double lo = c.override_or("decay_exponent", "window_lo", 1e2);
    const double hi = c.override_or("decay_exponent", "window_hi", 1e4);
    const double tol = c.override_or("decay_exponent", "rel_tol", 0.02);
    const auto [x, u] = decay_samples(p, c.scenario.C, lo, hi);
    const auto fit = fit_decay_exponent(x, u, 0.0, lo, hi);
    const double target = -p / (2.0 - p);
    const double rel = std::abs(fit.slope / target - 1.0);
    auto rep = CheckReport::upper_bound("decay_exponent", rel, tol, 0.0);
    rep.details["exponent_fit"] = fit.slope;
    rep.details["target"] = target;
    rep.details["r2"] = fit.r2;
    rep.details["points"] = static_cast<double>(fit.points);
    return rep;
}

CheckReport structure_check(double p) {
    std::vector<FluxSample> samples;
    for (int i = -20; i <= 20; ++i) {
        const double s = std::copysign(std::pow(10.0, std::abs(i) / 4.0 - 2.5), i);
        samples.push_back({0.0, 0.0, 1.0, i == 0 ? 0.0 : s});
    }
    return check_structure(FluxModel::prototype(p), samples);
}

}  // namespace

CellSetup build_cell(const ExperimentConfig& config, double p, double M, double t_end) {
    CellSetup cs{config.params, Grid(config.params.domain, config.params.n_cells), {}, {}, t_end};
    cs.params.p = p;
    cs.params.M = M;
    const double rb = rho_bar(M, cs.params.T, p);
    if (config.scenario.domain_halfwidth_rhobar > 0.0) {
        const double w = config.scenario.domain_halfwidth_rhobar * rb;
        cs.params.domain = {cs.params.y - w, cs.params.y + w};
    }
    try {
        cs.params.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError("params", e.what());
    }
    cs.grid = Grid(cs.params.domain, cs.params.n_cells);
    const Grid& g = cs.grid;
    const auto& sc = config.scenario;

    switch (sc.kind) {
        case ScenarioKind::barenblatt: {
            const BarenblattParams bp{p, sc.C, sc.t0, cs.params.y, std::nullopt};
            cs.u0 = barenblatt_field(bp, g, 0.0);
            cs.bc = barenblatt_boundary(bp, g);
            break;
        }
        case ScenarioKind::pinned: {
            cs.u0 = Field{std::vector<double>(g.n_nodes(), 0.0), -cs.params.tau_pre};
            if (sc.u0 == "random") {
                std::mt19937_64 rng(config.seed);
                std::uniform_real_distribution<double> U(0.0, 1.0);
                for (int b = 0; b < 3; ++b) {
                    const double c = g.domain().alpha + g.domain().length() * (0.2 + 0.6 * U(rng));
                    const double w = rb * (1.0 + 3.0 * U(rng));
                    const double a = 0.5 * M * U(rng);
                    for (std::size_t i = 1; i + 1 < g.n_nodes(); ++i) {
                        const double q = (g.node(i) - c) / w;
                        if (std::abs(q) < 1.0) cs.u0.values[i] += a * (1 - q * q) * (1 - q * q);
                    }
                }
            }
            const double pin = sc.pin_value > 0.0 ? sc.pin_value : 2.0 * M;
            const std::size_t node = g.nearest(cs.params.y);
            cs.u0.values[node] = pin;
            cs.bc = BoundarySpec::homogeneous_dirichlet();
            cs.bc.interior_pins.push_back({node, [pin](double) { return pin; }});
            cs.bc.description = "dirichlet(0)/dirichlet(0), pin(y)";
            break;
        }
        case ScenarioKind::custom: {
            const auto tab = read_table(sc.u0_table);
            cs.u0 = Field{std::vector<double>(g.n_nodes()), -cs.params.tau_pre};
            for (std::size_t i = 0; i < g.n_nodes(); ++i) cs.u0.values[i] = interpolate(tab, g.node(i));
            cs.bc.left = EndCondition::dirichlet(cs.u0.values.front());
            cs.bc.right = EndCondition::dirichlet(cs.u0.values.back());
            cs.bc.description = "dirichlet(table)/dirichlet(table)";
            break;
        }
    }
    return cs;
}

namespace {

CellOutcome run_cell(const ExperimentConfig& c, double p, double M) {
    CellOutcome out;
    const std::string key = chain_key(p, M);
    const double T = c.params.T;
    const double delta = c.chain.delta.value_or(default_delta(p));
    out.chain = compute_chain(p, c.chain.nu, c.chain.gamma1, delta, c.chain.c, M, T);
    const double rb = *out.chain.rho_bar;

    auto config_error = [&](const std::string& k, const std::string& what) {
        out.errors.push_back({ExitCode::config_error,
                              {{"kind", "config"}, {"key", k}, {"message", what}, {"cell", key}}});
    };

    // Checks that need no trajectory.
    const bool needs_traj = std::any_of(c.checks.begin(), c.checks.end(), [](const std::string& s) {
        return s != "decay_exponent" && s != "structure" && s != "degiorgi";
    });
    const bool energy = wants(c, "energy");
    const double t_end = c.scenario.kind == ScenarioKind::barenblatt || energy ? T : 0.5 * T;

    std::optional<Trajectory> traj;
    Params params = c.params;
    if (needs_traj) {
        try {
            auto cs = build_cell(c, p, M, t_end);
            params = cs.params;
            traj = solve(cs.params, cs.grid, cs.u0, cs.bc, cs.t_end).trajectory;
        } catch (const ConfigError& e) {
            config_error(e.key(), e.what());
            return out;
        } catch (const StepFailure& e) {
            out.errors.push_back({ExitCode::solver_failure,
                                  {{"kind", "solver"},
                                   {"message", e.what()},
                                   {"time", e.time()},
                                   {"residual", e.residual()},
                                   {"cell", key}}});
            return out;
        }
    } else {
        params.p = p;
        params.M = M;
    }

    for (const auto& name : c.checks) {
        try {
            if (name == "weak_supersolution") {
                const int count = static_cast<int>(c.override_or(name, "count", 16));
                const double radius = c.override_or(name, "radius_rhobar", 0.0) * rb;
                const Grid& g = traj->grid();
                const double r = radius > 0.0 ? radius : g.domain().length() / 16.0;
                const auto tests = bump_basis(g, traj->front().time, traj->back().time, count, r);
                const double tol = c.override_or(name, "tol", default_weak_tolerance(*traj));
                out.rows.push_back(make_row(name, p, M, kNaN,
                                            check_weak_supersolution(*traj, tests, p, tol), key));
            } else if (name == "energy") {
                const double rho_ratio = c.override_or(name, "rho_rhobar", 4.0);
                const Cutoff cut(params.y, rho_ratio * rb, 0.0, T);
                EnergyInputs in;
                in.p = p;
                in.a = c.override_or(name, "a", in.a);
                in.H = c.override_or(name, "H", in.H);
                in.omega = c.override_or(name, "omega_over_M", 1.0) * M;
                out.rows.push_back(make_row(name, p, M, rho_ratio,
                                            check_energy_estimate(*traj, cut, in, energy_gamma(p)), key));
            } else if (name == "log_lemma" || name == "harnack") {
                std::vector<double> lx, ly;
                for (double ratio : c.sweep.rho_over_rhobar) {
                    try {
                        auto rep = name == "harnack" ? check_harnack(*traj, params, out.chain, ratio * rb)
                                                     : check_log_lemma(*traj, params, out.chain, ratio * rb);
                        if (name == "harnack" && rep.details.count("log_sigma_emp")) {
                            lx.push_back(std::log(ratio));
                            ly.push_back(rep.details["log_sigma_emp"]);
                        }
                        out.rows.push_back(make_row(name, p, M, ratio, std::move(rep), key));
                    } catch (const HypothesisFailed& e) {
                        out.rows.push_back(make_row(name, p, M, ratio, hypothesis_row(name, e.what()), key));
                    }
                }
                if (name == "harnack" && lx.size() >= 2) {
                    const double slope = linear_fit(lx, ly).first;
                    const double bound = c.override_or(name, "max_abs_slope", 0.3);
                    auto rep = CheckReport::upper_bound("harnack_scaling", std::abs(slope), bound, 0.0);
                    rep.details["exponent_fit"] = slope;
                    rep.details["sigma_emp"] = std::exp(ly.front());
                    out.rows.push_back(make_row("harnack_scaling", p, M, kNaN, std::move(rep), key));
                }
                if (name == "log_lemma") {
                    const double rho = c.sweep.rho_over_rhobar.front() * rb;
                    const double L = std::min(0.5 * M, std::pow(T / std::pow(rho, p), 1.0 / (2.0 - p)));
                    for (int s = 1; s <= out.chain.s_o + 2; ++s) {
                        out.bad_set.emplace_back(
                            s, measure_bad_times(*traj, params.y, rho, L / std::ldexp(1.0, s), T) / (0.5 * T));
                    }
                }
            } else if (name == "degiorgi") {
                const double ratio = c.override_or(name, "rho_rhobar", 1.0);
                const double d = c.override_or(name, "delta", 0.0);
                DeGiorgiOptions opt;
                opt.steps = static_cast<std::size_t>(c.override_or(name, "steps", 2000));
                Params dp = c.params;
                dp.p = p;
                dp.M = M;
                out.rows.push_back(make_row(name, p, M, ratio,
                                            check_degiorgi(dp, M, ratio * rb, d > 0.0 ? d : delta, opt),
                                            key));
            } else if (name == "transformed_equation") {
                const double tol = c.override_or(name, "tol", 0.05);
                out.rows.push_back(make_row(name, p, M, kNaN,
                                            check_transformed_equation(*traj, params, out.chain, tol), key));
            } else if (name == "hypothesis_transport") {
                out.rows.push_back(make_row(name, p, M, kNaN, check_hypothesis_transport(*traj, params), key));
            } else if (name == "decay_exponent") {
                out.rows.push_back(make_row(name, p, M, kNaN, decay_exponent_check(c, p), key));
            } else if (name == "structure") {
                out.rows.push_back(make_row(name, p, M, kNaN, structure_check(p), key));
            }
        } catch (const HypothesisFailed& e) {
            out.rows.push_back(make_row(name, p, M, kNaN, hypothesis_row(name, e.what()), key));
        } catch (const StepFailure& e) {
            out.errors.push_back({ExitCode::solver_failure,
                                  {{"kind", "solver"},
                                   {"check", name},
                                   {"message", e.what()},
                                   {"time", e.time()},
                                   {"residual", e.residual()},
                                   {"cell", key}}});
        } catch (const InvalidInput& e) {
            config_error("check." + name, e.what());
        } catch (const DomainError& e) {
            config_error("check." + name, e.what());
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

ordered_json parse_or_string(const std::string& s) {
    try {
        return ordered_json::parse(s);
    } catch (const std::exception&) {
        return s;
    }
}

ordered_json manifest_base(const std::map<std::string, std::string>& flat) {
    ordered_json m;
    m["tool"] = "harnack-lab";
    m["version"] = HARNACK_VERSION;
    m["delta_table"] = kDeltaTableVersion;
#ifdef __VERSION__
    m["compiler"] = __VERSION__;
#endif
    m["config"] = flat;
    return m;
}

int worker_count(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HARNACK_LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

void write_plots(const ExperimentConfig& c, const std::vector<ResultRow>& rows,
                 const std::vector<CellOutcome>& cells, const std::vector<std::pair<double, double>>& keys,
                 const std::filesystem::path& dir, std::vector<std::string>& written) {
    for (const auto& plot : c.plots) {
        PlotSpec spec;
        if (plot == "decay_fit") {
            spec = {"Far-field decay of the source-type profile", "log10 |x|", "log10 u", {}};
            const double lo = c.override_or("decay_exponent", "window_lo", 1e2);
            const double hi = c.override_or("decay_exponent", "window_hi", 1e4);
            for (double p : c.p_values()) {
                auto [x, u] = decay_samples(p, c.scenario.C, lo, hi);
                const auto fit = fit_decay_exponent(x, u, 0.0, lo, hi);
                Series s{"p=" + g17(p), {}, {}}, f{"fit slope " + g17(fit.slope).substr(0, 7), {}, {}};
                std::vector<double> lx, ly;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    lx.push_back(std::log10(x[i]));
                    ly.push_back(std::log10(u[i]));
                }
                const auto [slope, icpt] = linear_fit(lx, ly);
                s.x = lx;
                s.y = ly;
                f.x = {lx.front(), lx.back()};
                f.y = {icpt + slope * lx.front(), icpt + slope * lx.back()};
                spec.series.push_back(std::move(s));
                spec.series.push_back(std::move(f));
            }
        } else if (plot == "sigma_vs_rho") {
            spec = {"Empirical sigma against rho", "log10 rho/rho_bar", "log10 sigma_emp", {}};
            std::map<std::pair<double, double>, Series> by_cell;
            for (const auto& r : rows) {
                if (r.name != "harnack") continue;
                const double s = detail_or_nan(r.report, "log_sigma_emp");
                auto& series = by_cell[{r.p, r.M}];
                series.label = "p=" + g17(r.p) + " M=" + g17(r.M);
                series.markers = true;
                series.x.push_back(std::log10(r.rho_over_rhobar));
                series.y.push_back(s / std::log(10.0));
            }
            for (auto& [_, s] : by_cell) spec.series.push_back(std::move(s));
        } else if (plot == "bad_set_vs_so") {
            spec = {"Bad-time measure against the level index s", "s", "|A_s| / (T/2)", {}};
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (cells[k].bad_set.empty()) continue;
                Series s{"p=" + g17(keys[k].first) + " M=" + g17(keys[k].second), {}, {}, true};
                for (const auto& [lvl, m] : cells[k].bad_set) {
                    s.x.push_back(lvl);
                    s.y.push_back(m);
                }
                Series so{"s_o, p=" + g17(keys[k].first), {double(cells[k].chain.s_o), double(cells[k].chain.s_o)},
                          {0.0, 1.0}};
                spec.series.push_back(std::move(s));
                spec.series.push_back(std::move(so));
            }
            spec.series.push_back({"nu", {1.0, 8.0}, {c.chain.nu, c.chain.nu}});
        }
        const std::string file = plot + ".svg";
        write_file(dir / file, render_svg(spec));
        written.push_back(file);
    }
}

}  // namespace

std::string results_csv(const std::vector<ResultRow>& rows) {
    std::string out = std::string(kResultsHeader) + "\n";
    for (const auto& r : rows) {
        out += r.name + "," + g17(r.p) + "," + g17(r.rho_over_rhobar) + "," +
               (r.report.passed ? "true" : "false") + "," + g17(r.report.margin) + "," +
               g17(detail_or_nan(r.report, "sigma_emp")) + "," +
               g17(detail_or_nan(r.report, "exponent_fit")) + "\n";
    }
    return out;
}

RunResult run_experiment(const ExperimentConfig& config) {
    RunResult result;
    const std::filesystem::path dir = config.output_dir;
    std::filesystem::create_directories(dir);
    ordered_json manifest = manifest_base(to_flat_map(config));
    ordered_json errors = ordered_json::array();

    std::vector<std::pair<double, double>> keys;
    for (double p : config.p_values()) {
        for (double M : config.M_values()) keys.emplace_back(p, M);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<CellOutcome> cells(keys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < keys.size(); k = next++) {
            try {
                cells[k] = run_cell(config, keys[k].first, keys[k].second);
            } catch (const std::exception& e) {
                cells[k].errors.push_back({ExitCode::config_error,
                                           {{"kind", "config"}, {"key", "cell"}, {"message", e.what()}}});
            }
        }
    };
    const int workers = worker_count(keys.size());
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool config_failed = false, solver_failed = false;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        auto& cell = cells[k];
        result.chains[chain_key(keys[k].first, keys[k].second)] = cell.chain;
        for (auto& r : cell.rows) result.rows.push_back(std::move(r));
        for (auto& e : cell.errors) {
            config_failed |= e.code == ExitCode::config_error;
            solver_failed |= e.code == ExitCode::solver_failure;
            result.errors.push_back(e.record.dump());
            errors.push_back(e.record);
        }
    }
    const bool all_passed = std::all_of(result.rows.begin(), result.rows.end(),
                                        [](const ResultRow& r) { return r.report.passed; });
    result.code = config_failed   ? ExitCode::config_error
                  : solver_failed ? ExitCode::solver_failure
                  : all_passed    ? ExitCode::ok
                                  : ExitCode::check_failed;

    write_file(dir / "results.csv", results_csv(result.rows));
    std::vector<std::string> written{"results.csv", "manifest.json"};
    write_plots(config, result.rows, cells, keys, dir, written);

    ordered_json chains = ordered_json::object();
    for (const auto& [k, ch] : result.chains) chains[k] = parse_or_string(ch.to_json());
    manifest["chains"] = chains;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& r = result.rows[i];
        ordered_json row;
        row["row"] = i;
        row["name"] = r.name;
        row["p"] = r.p;
        row["M"] = r.M;
        if (std::isfinite(r.rho_over_rhobar)) row["rho_over_rhobar"] = r.rho_over_rhobar;
        row["chain"] = r.chain_key;
        row["report"] = parse_or_string(r.report.to_json());
        rows.push_back(row);
    }
    manifest["rows"] = rows;
    manifest["outputs"] = written;
    manifest["errors"] = errors;
    manifest["exit_code"] = static_cast<int>(result.code);
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    return result;
}

RunResult run(const std::filesystem::path& config_path) {
    try {
        return run_experiment(load_config(config_path));
    } catch (const ConfigError& e) {
        // The config did not validate: salvage output_dir from the raw text.
        std::string dir = "out";
        std::ifstream in(config_path);
        std::string line;
        while (in && std::getline(in, line)) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string k = line.substr(0, eq);
            k.erase(std::remove_if(k.begin(), k.end(), ::isspace), k.end());
            if (k == "output_dir") {
                std::string v = line.substr(eq + 1);
                const auto b = v.find_first_not_of(" \t\"");
                const auto en = v.find_last_not_of(" \t\"\r");
                if (b != std::string::npos) dir = v.substr(b, en - b + 1);
            }
        }
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        ordered_json manifest = manifest_base({});
        ordered_json err = {{"kind", "config"}, {"key", e.key()}, {"message", e.what()}};
        manifest["errors"] = ordered_json::array({err});
        manifest["exit_code"] = static_cast<int>(ExitCode::config_error);
        write_file(std::filesystem::path(dir) / "manifest.json", manifest.dump(2) + "\n");
        RunResult r;
        r.code = ExitCode::config_error;
        r.errors.push_back(err.dump());
        return r;
    }
}

}  // namespace harnack
