// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harnack/constants.hpp"
#include "harnack/convergence.hpp"
#include "harnack/exact.hpp"
#include "harnack/experiment.hpp"
#include "harnack/flux.hpp"
#include "harnack/errors.hpp"
#include "harnack/solver.hpp"
#include "harnack/verifier.hpp"

using namespace harnack;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) passed = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [x]");
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

int failures = 0;

void report(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs <= budget_s, fmt("%.1fs", secs) + " <= " + fmt("%.0fs", budget_s));
    if (!out.passed) ++failures;
    std::printf("%s [%d] %s: %s\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), out.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double linf(const Field& a, const Field& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a.values[i] - b.values[i]));
    return e;
}

Field bump(const Grid& g, double c, double r, double a) {
    Field f{std::vector<double>(g.n_nodes(), 0.0), 0.0};
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
        const double q = (g.node(i) - c) / r;
        if (std::abs(q) < 1.0) f.values[i] = a * (1 - q * q) * (1 - q * q);
    }
    return f;
}

const std::vector<double> kPs{1.2, 1.5, 1.8};

/// Advances an ordered pair with identical substeps and counts nodes where a > b + tol.
int lockstep_violations(const Params& P, const Grid& g, Field a, Field b, const BoundarySpec& ba,
                        const BoundarySpec& bb, double t_end, double tol) {
    int bad = 0;
    std::function<void(Field&, Field&, double, int)> advance = [&](Field& x, Field& y, double dt, int depth) {
        try {
            Field nx = step_implicit(g, x, dt, P, ba).field;
            Field ny = step_implicit(g, y, dt, P, bb).field;
            x = std::move(nx);
            y = std::move(ny);
        } catch (const StepFailure&) {
            if (depth >= 8) throw;
            advance(x, y, 0.5 * dt, depth + 1);
            advance(x, y, 0.5 * dt, depth + 1);
        }
        for (std::size_t i = 0; i < x.size(); ++i) bad += x.values[i] > y.values[i] + tol;
    };
    while (a.time < t_end - 1e-12) advance(a, b, std::min(P.dt, t_end - a.time), 0);
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path out_root = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "harnack_acceptance";
    fs::remove_all(out_root);
    fs::create_directories(out_root);

    report(1, "source-type solution certified by its weak residual", 60.0, [] {
        Outcome o;
        for (double p : kPs) {
            BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
            BarenblattParams bad = bp;
            bad.k_override = 1.1 * bp.k();
            std::vector<double> r, rb;
            for (std::size_t n : {128u, 256u, 512u, 1024u}) {
                const Grid g({-10.0, 10.0}, n);
                r.push_back(barenblatt_residual(bp, g, 1.0, g.h() * g.h()));
                rb.push_back(barenblatt_residual(bad, g, 1.0, g.h() * g.h()));
            }
            double worst = 1e300;
            for (std::size_t k = 1; k < r.size(); ++k) worst = std::min(worst, std::log2(r[k - 1] / r[k]));
            const double ctl = std::log2(rb[rb.size() - 2] / rb.back());
            o.require(worst >= 1.0, "p=" + fmt("%.1f", p) + " min order " + fmt("%.2f", worst));
            o.require(ctl < 0.5, "k+10% order " + fmt("%.2f", ctl));
        }
        return o;
    });

    report(2, "solver accuracy and convergence orders", 120.0, [] {
        Outcome o;
        ConvergenceOptions opt;
        const double err = barenblatt_linf_error(opt, 2048, 1e-3, opt.eps_reg);
        o.require(err <= 1e-3, "Linf error " + fmt("%.3e", err) + " <= 1e-3");
        const auto c = run_convergence(opt);
        o.require(c.space_order >= kRequiredSpaceOrder, "space order " + fmt("%.3f", c.space_order));
        o.require(c.time_order >= kRequiredTimeOrder, "time order " + fmt("%.3f", c.time_order));
        o.require(c.monotone, "monotone ladder");
        return o;
    });

    report(3, "far-field decay exponent -p/(2-p)", 10.0, [] {
        Outcome o;
        for (double p : kPs) {
            const BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
            std::vector<double> x, u;
            for (int i = 0; i < 400; ++i) {
                x.push_back(1e2 * std::pow(1e2, i / 399.0));
                u.push_back(barenblatt_eval(bp, x.back(), 0.0));
            }
            const auto fit = fit_decay_exponent(x, u, 0.0, 1e2, 1e4);
            const double target = -p / (2.0 - p);
            o.require(std::abs(fit.slope / target - 1.0) <= 0.02,
                      "p=" + fmt("%.1f", p) + " slope " + fmt("%.4f", fit.slope) + " vs " + fmt("%.1f", target));
        }
        return o;
    });

    // Criteria 4, 5, 7, 9 (transport) and 10 read the full default suite.
    ExperimentConfig suite = default_suite_config();
    suite.output_dir = (out_root / "suite_a").string();
    RunResult first;
    double suite_seconds = 0.0;
    {
        const auto t0 = std::chrono::steady_clock::now();
        first = run_experiment(suite);
        suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    auto rows = [&](const std::string& name) {
        std::vector<const ResultRow*> out;
        for (const auto& r : first.rows) {
            if (r.name == name) out.push_back(&r);
        }
        return out;
    };

    report(4, "Harnack lower bound on pinned scenarios", 300.0 - suite_seconds, [&] {
        Outcome o;
        const auto h = rows("harnack");
        o.require(h.size() == 9, std::to_string(h.size()) + " harnack cells");
        int ok = 0;
        for (const auto* r : h) ok += r->report.passed && r->report.margin > 0.0;
        o.require(ok == 9, std::to_string(ok) + "/9 with log margin > 0");
        for (const auto* r : rows("harnack_scaling")) {
            const double s = r->report.details.at("exponent_fit");
            o.require(s >= -0.3 && s <= 0.3, "p=" + fmt("%.1f", r->p) + " sigma slope " + fmt("%.3f", s));
        }
        o.require(first.errors.empty(), "no run errors");
        return o;
    });

    report(5, "bad-time set within nu T/2", 300.0 - suite_seconds, [&] {
        Outcome o;
        const auto l = rows("log_lemma");
        o.require(l.size() == 9, std::to_string(l.size()) + " log-lemma cells");
        double worst = 0.0;
        for (const auto* r : l) {
            o.passed &= r->report.passed;
            worst = std::max(worst, r->report.details.at("measure_fraction"));
        }
        o.require(worst <= 0.25, "max |A_s_o|/(T/2) = " + fmt("%.4f", worst) + " <= nu = 0.25");
        return o;
    });

    report(6, "DeGiorgi delta independent of M and rho", 120.0, [] {
        Outcome o;
        Params P;
        P.p = 1.5;
        P.n_cells = 512;
        const double rb = rho_bar(1.0, 1.0, 1.5);
        const double d = check_degiorgi(P, 1.0, rb, 0.05).details.at("delta_max");
        const double dM = check_degiorgi(P, 2.0, rb, 0.05).details.at("delta_max");
        const double dR = check_degiorgi(P, 1.0, 2.0 * rb, 0.05).details.at("delta_max");
        o.require(d > 0.0, "delta_max " + fmt("%.4f", d));
        o.require(dM / d >= 0.8 && dM / d <= 1.25, "M ratio " + fmt("%.4f", dM / d));
        o.require(dR / d >= 0.8 && dR / d <= 1.25, "rho ratio " + fmt("%.4f", dR / d));
        return o;
    });

    report(7, "energy estimate with the derived gamma(p)", 60.0, [&] {
        Outcome o;
        std::map<double, double> gstar;
        const auto e = rows("energy");
        o.require(e.size() == 3, std::to_string(e.size()) + " energy cells");
        for (const auto* r : e) {
            o.require(r->report.passed, "p=" + fmt("%.1f", r->p) + " gamma* " +
                                            fmt("%.3f", r->report.details.at("gamma_star")) + " <= " +
                                            fmt("%.2f", r->report.details.at("gamma")));
            gstar[r->p] = r->report.details.at("gamma_star");
        }
        // Reference scenario: pinned, rho = 4 rho_bar, a = 1/2, H omega = M/2.
        o.require(gstar[1.2] > gstar[1.8], "gamma*(1.2) " + fmt("%.3f", gstar[1.2]) + " > gamma*(1.8) " +
                                               fmt("%.3f", gstar[1.8]));
        return o;
    });

    report(8, "scaling equivariance, comparison, structure", 60.0, [] {
        Outcome o;
        const double p = 1.5;
        const BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
        Params P;
        P.p = p;
        P.n_cells = 1024;
        P.dt = 1e-3;
        const Grid g(P.domain, P.n_cells);
        const auto bc = barenblatt_boundary(bp, g);
        const auto u = solve(P, g, barenblatt_field(bp, g, 0.0), bc, 0.5).trajectory;
        double disc = 0.0;
        for (const auto& f : u.fields()) disc = std::max(disc, linf(f, barenblatt_field(bp, g, f.time)));
        for (auto [A, B] : {std::pair{2.0, 1.0}, std::pair{1.0, 2.0}}) {
            const auto vt = scaling_transform(u, A, B, p);
            const double factor = std::pow(A, p - 2.0) * std::pow(B, p);
            Params Q = P;
            Q.domain = vt.grid().domain();
            Q.dt = P.dt / factor;
            const auto vd = solve(Q, vt.grid(), vt.front(), scale_boundary(bc, A, B, p), vt.back().time).trajectory;
            double diff = 0.0;
            const std::size_t n = std::min(vd.size(), vt.size());
            for (std::size_t k = 0; k < n; ++k) diff = std::max(diff, linf(vd.field(k), vt.field(k)));
            o.require(n == vt.size() && diff <= 3.0 * A * disc,
                      "(A,B)=(" + fmt("%.0f", A) + "," + fmt("%.0f", B) + ") diff " + fmt("%.2e", diff) +
                          " <= 3 x " + fmt("%.2e", A * disc));
        }

        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        int violations = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Params R;
            R.p = kPs[trial % 3];
            R.n_cells = 256;
            R.dt = 5e-3;
            const Grid gg(R.domain, R.n_cells);
            Field a = bump(gg, -6.0 + 12.0 * U(rng), 1.0 + 3.0 * U(rng), U(rng));
            Field b = a;
            const Field extra = bump(gg, -6.0 + 12.0 * U(rng), 1.0 + 3.0 * U(rng), U(rng));
            const double ga = 0.2 * U(rng), gb = ga + 0.2 * U(rng);
            for (std::size_t i = 0; i < b.size(); ++i) b.values[i] += extra.values[i];
            a.values.front() = a.values.back() = ga;
            b.values.front() = b.values.back() = gb;
            BoundarySpec ba, bb;
            ba.left = ba.right = EndCondition::dirichlet(ga);
            bb.left = bb.right = EndCondition::dirichlet(gb);
            violations += lockstep_violations(R, gg, a, b, ba, bb, 0.5, 1e-9);
        }
        o.require(violations == 0, "comparison violations " + std::to_string(violations) + " on 20 pairs");

        bool zero = true;
        for (double q : kPs) {
            std::vector<FluxSample> s;
            for (int i = -12; i <= 12; ++i) s.push_back({0.0, 0.0, 1.0, i * std::abs(i) * 0.25});
            const auto rep = check_structure(FluxModel::prototype(q), s);
            zero &= rep.passed && rep.details.at("coercivity_margin") == 0.0 &&
                    rep.details.at("growth_margin") == 0.0;
        }
        o.require(zero, "prototype structure margins zero");
        return o;
    });

    report(9, "change of variables and transformed equation", 60.0, [&] {
        Outcome o;
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        double worst = 0.0;
        for (double p : kPs) {
            const TransformFrame fr{0.25, 1.0, rho_bar(1.0, 1.0, p), p, 1.0};
            for (int k = 0; k < 1000; ++k) {
                const double x = -20.0 + 40.0 * U(rng), t = 0.4999 * U(rng);
                const auto zt = to_transformed(x, t, fr);
                const auto [x2, t2] = from_transformed(zt.z, zt.tau, fr);
                worst = std::max({worst, std::abs(x2 - x) / (1.0 + std::abs(x)), std::abs(t2 - t)});
            }
        }
        o.require(worst <= 8.0 * std::numeric_limits<double>::epsilon(), "roundtrip " + fmt("%.1e", worst));

        for (double p : kPs) {
            Params P;
            P.p = p;
            const double rb = rho_bar(1.0, 1.0, p);
            P.domain = {-40.0 * rb, 40.0 * rb};
            const BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
            std::vector<Trajectory> ladder;
            for (int k = 0; k < 3; ++k) {
                P.n_cells = 256u << k;
                P.dt = 4e-3 / std::pow(2.0, k);
                const Grid g(P.domain, P.n_cells);
                ladder.push_back(
                    solve(P, g, barenblatt_field(bp, g, 0.0), barenblatt_boundary(bp, g), 0.5).trajectory);
            }
            const auto ch = compute_chain(p, 0.25, kDefaultGamma1, default_delta(p), 4.0, 1.0, 1.0);
            const auto rep = check_transformed_refinement(ladder, P, ch, 1e-2);
            o.require(rep.passed, "p=" + fmt("%.1f", p) + " residual " + fmt("%.2e", rep.details.at("residual_0")) +
                                      " -> " + fmt("%.2e", rep.details.at("residual_2")));
        }
        const auto t = rows("hypothesis_transport");
        int ok = 0;
        for (const auto* r : t) ok += r->report.passed;
        o.require(t.size() == 3 && ok == 3, "v(0,tau) >= e^{tau/(2-p)} on " + std::to_string(ok) + "/3 pinned runs");
        return o;
    });

    report(10, "byte-identical results.csv on rerun", 300.0, [&] {
        Outcome o;
        ExperimentConfig again = suite;
        again.output_dir = (out_root / "suite_b").string();
        run_experiment(again);
        const auto a = slurp(fs::path(suite.output_dir) / "results.csv");
        const auto b = slurp(fs::path(again.output_dir) / "results.csv");
        o.require(!a.empty() && a == b, std::to_string(a.size()) + " bytes identical");
        return o;
    });

    std::printf("%s: %d criteria failed (suite run %.1fs, outputs in %s)\n", failures ? "FAILED" : "OK", failures,
                suite_seconds, out_root.string().c_str());
    return failures ? 1 : 0;
}
