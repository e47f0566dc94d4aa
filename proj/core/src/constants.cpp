#include "harnack/constants.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "harnack/errors.hpp"
#include "json.hpp"

namespace harnack {

namespace {

void check_p(double p) {
    if (!(p > 1.0 && p < 2.0)) throw InvalidInput("need 1 < p < 2");
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

double rho_bar(double M, double T, double p) {
    check_p(p);
    if (!(M > 0.0) || !(T > 0.0)) throw InvalidInput("rho_bar: need M, T > 0");
    return std::pow(std::pow(2.0, 2.0 - p) * T / std::pow(M, 2.0 - p), 1.0 / p);
}

ConstantChain compute_chain(double p, double nu, double gamma1, double delta, double c) {
    check_p(p);
    if (!(nu > 0.0 && nu < 1.0)) throw InvalidInput("chain.nu: need 0 < nu < 1");
    if (!(gamma1 > 0.0) || !std::isfinite(gamma1)) throw InvalidInput("chain.gamma1: need gamma1 > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("chain.delta: need 0 < delta < 1");
    if (!(c >= 4.0) || !std::isfinite(c)) throw InvalidInput("chain.c: need c >= 4");

    ConstantChain ch;
    ch.p = p;
    ch.nu = nu;
    ch.gamma1 = gamma1;
    ch.delta = delta;
    ch.c = c;
    ch.s_o = static_cast<int>(std::ceil(gamma1 / nu)) + 1;
    const double q = p / (2.0 - p);
    const double ln2 = std::log(2.0);
    const double log_e_tau = p * std::log(2.5) + ch.s_o * (2.0 - p) * ln2 - std::log(delta);
    ch.tau_o_transformed = log_e_tau;
    ch.e_tau_o = std::exp(log_e_tau);
    ch.log_sigma_o = -(ch.s_o + 1) * ln2 + q * std::log(2.0 / (5.0 * c));
    ch.log_sigma_bar = -(ch.s_o + 2) * ln2 + q * std::log(0.4) - (2.0 / (2.0 - p)) * ch.e_tau_o;
    ch.theta_coeff = delta;
    ch.log_k = ch.tau_o_transformed / (2.0 - p);
    if (!std::isfinite(ch.log_sigma_bar)) throw InvalidInput("constant chain overflowed");
    return ch;
}

ConstantChain compute_chain(double p, double nu, double gamma1, double delta, double c, double M,
                            double T) {
    ConstantChain ch = compute_chain(p, nu, gamma1, delta, c);
    ch.rho_bar = rho_bar(M, T, p);
    ch.M = M;
    ch.T = T;
    return ch;
}

double theta(double delta, double M, double p) {
    check_p(p);
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("theta: need 0 < delta < 1");
    if (!(M > 0.0)) throw InvalidInput("theta: need M > 0");
    return delta * std::pow(M, 2.0 - p);
}

double default_delta(double p) {
    check_p(p);
    // (p, delta) pairs: half of delta_max from the DeGiorgi bisection at
    // M = 1, n_cells = 512; see tests/unit/test_verifier.cpp.
    static constexpr std::array<std::pair<double, double>, 3> table{{
        {1.2, 0.24},
        {1.5, 0.297},
        {1.8, 0.397},
    }};
    if (p <= table.front().first) return table.front().second;
    if (p >= table.back().first) return table.back().second;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (p <= table[i].first) {
            const auto [p0, d0] = table[i - 1];
            const auto [p1, d1] = table[i];
            return d0 + (d1 - d0) * (p - p0) / (p1 - p0);
        }
    }
    return table.back().second;
}

std::string ConstantChain::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["nu"] = nu;
    j["gamma1"] = gamma1;
    j["delta"] = delta;
    j["c"] = c;
    j["s_o"] = s_o;
    j["e_tau_o"] = e_tau_o;
    j["tau_o_transformed"] = tau_o_transformed;
    j["log_k"] = log_k;
    j["log_sigma_o"] = log_sigma_o;
    j["log_sigma_bar"] = log_sigma_bar;
    j["theta_coeff"] = theta_coeff;
    if (rho_bar) j["rho_bar"] = *rho_bar;
    if (M) j["M"] = *M;
    if (T) j["T"] = *T;
    return j.dump();
}

std::string ConstantChain::to_key_value() const {
    std::ostringstream os;
    os << "p=" << fmt17(p) << '\n'
       << "nu=" << fmt17(nu) << '\n'
       << "gamma1=" << fmt17(gamma1) << '\n'
       << "delta=" << fmt17(delta) << '\n'
       << "c=" << fmt17(c) << '\n'
       << "s_o=" << s_o << '\n'
       << "e_tau_o=" << fmt17(e_tau_o) << '\n'
       << "tau_o_transformed=" << fmt17(tau_o_transformed) << '\n'
       << "log_k=" << fmt17(log_k) << '\n'
       << "log_sigma_o=" << fmt17(log_sigma_o) << '\n'
       << "log_sigma_bar=" << fmt17(log_sigma_bar) << '\n'
       << "theta_coeff=" << fmt17(theta_coeff) << '\n';
    if (M) os << "M=" << fmt17(*M) << '\n';
    if (T) os << "T=" << fmt17(*T) << '\n';
    if (rho_bar) os << "rho_bar=" << fmt17(*rho_bar) << '\n';
    return os.str();
}

double TransformFrame::stretch() const { return std::pow(2.0, (2.0 - p) / p); }

double TransformFrame::transformed_diffusion() const {
    return std::pow(stretch(), p) * T / (2.0 * std::pow(rho_bar, p) * std::pow(M, 2.0 - p));
}

Transformed to_transformed(double x, double t, const TransformFrame& f) {
    const double half = 0.5 * f.T;
    if (!(t < half)) throw DomainError("to_transformed: need t < T/2");
    if (!(f.rho_bar > 0.0)) throw InvalidInput("to_transformed: need rho_bar > 0");
    return {f.stretch() * (x - f.y) / f.rho_bar, -std::log((half - t) / half)};
}

std::pair<double, double> from_transformed(double z, double tau, const TransformFrame& f) {
    const double half = 0.5 * f.T;
    return {f.y + z * f.rho_bar / f.stretch(), half - half * std::exp(-tau)};
}

double transform_field(double u_value, double tau, double M, double p) {
    return (u_value / M) * std::exp(tau / (2.0 - p));
}

}  // namespace harnack
