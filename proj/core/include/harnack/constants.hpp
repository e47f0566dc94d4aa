#pragma once

#include <optional>
#include <string>

namespace harnack {

/// Explicit constants of the expansion-of-positivity argument.
///
/// The sigma's are far below double range for realistic inputs
/// (sigma_bar ~ e^{-450}), so only their natural logs are stored.
/// `tau_o_transformed` is the level in the transformed time variable; it is
/// unrelated to Params::tau_pre, the pre-history width of the domain.
struct ConstantChain {
    double p = 1.5;
    double nu = 0.25;
    double gamma1 = 2.0;
    double delta = 0.1;
    double c = 4.0;
    int s_o = 0;
    double e_tau_o = 0.0;
    double tau_o_transformed = 0.0;
    double log_sigma_o = 0.0;
    double log_sigma_bar = 0.0;
    /// theta = theta_coeff * M^{2-p}.
    double theta_coeff = 0.0;
    /// k = e^{tau_o / (2-p)}, as a log.
    double log_k = 0.0;
    /// Only known once M and T are fixed.
    std::optional<double> rho_bar;
    std::optional<double> M;
    std::optional<double> T;

    /// Flat JSON object; sigma's appear only as logs.
    std::string to_json() const;
    /// Flat key=value lines in a fixed order.
    std::string to_key_value() const;
};

/// Radius at which (T / rho^p)^{1/(2-p)} equals M/2:
/// rho_bar = (2^{2-p} T / M^{2-p})^{1/p}.
double rho_bar(double M, double T, double p);

/// s_o = ceil(gamma1 / nu) + 1,
/// e^{tau_o} = (5/2)^p 2^{s_o (2-p)} / delta,
/// log sigma_o = -(s_o + 1) ln 2 + (p/(2-p)) ln(2 / (5c)),
/// log sigma_bar = -(s_o + 2) ln 2 + (p/(2-p)) ln(2/5) - (2/(2-p)) e^{tau_o}.
/// Throws InvalidInput outside nu in (0,1), gamma1 > 0, delta in (0,1), c >= 4.
ConstantChain compute_chain(double p, double nu, double gamma1, double delta, double c);

/// Same chain with rho_bar filled in for the given M and T.
ConstantChain compute_chain(double p, double nu, double gamma1, double delta, double c, double M,
                            double T);

/// Waiting-time factor of the DeGiorgi-type lemma: theta = delta M^{2-p}.
double theta(double delta, double M, double p);

/// Default gamma1: the Lipschitz constant of the piecewise-linear space cutoff.
inline constexpr double kDefaultGamma1 = 2.0;
inline constexpr double kDefaultNu = 0.25;
inline constexpr double kDefaultC = 4.0;

/// Empirical delta for the DeGiorgi-type lemma, interpolated in p from a
/// small calibration table (half the bisected delta_max). Non-normative:
/// the lemma only asserts that some delta(p) exists.
double default_delta(double p);
/// Version tag of the calibration table behind default_delta().
inline constexpr const char* kDeltaTableVersion = "degiorgi-delta-v1";

/// Coordinates of the self-similar change of variables around (y, T/2).
struct TransformFrame {
    double y = 0.0;
    double T = 1.0;
    double rho_bar = 1.0;
    double p = 1.5;
    double M = 1.0;

    /// Spatial stretch lambda in z = lambda (x - y) / rho_bar; lambda = 2^{(2-p)/p}.
    double stretch() const;
    /// Diffusion coefficient kappa that the map produces in
    /// v_tau - kappa (|v_z|^{p-2} v_z)_z = v / (2-p). With the stretch above,
    /// kappa = lambda^p T / (2 rho_bar^p M^{2-p}) = 1/2.
    double transformed_diffusion() const;
};

struct Transformed {
    double z = 0.0;
    double tau = 0.0;
};

/// z = 2^{(2-p)/p} (x - y) / rho_bar,  tau = -ln((T/2 - t) / (T/2)).
/// Throws DomainError for t >= T/2.
Transformed to_transformed(double x, double t, const TransformFrame& frame);

/// Inverse of to_transformed: returns (x, t).
std::pair<double, double> from_transformed(double z, double tau, const TransformFrame& frame);

/// v = (u / M) e^{tau / (2-p)}.
double transform_field(double u_value, double tau, double M, double p);

}  // namespace harnack
