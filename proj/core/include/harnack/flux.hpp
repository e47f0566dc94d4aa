#pragma once

#include <functional>
#include <span>

#include "harnack/report.hpp"
#include "harnack/types.hpp"

namespace harnack {

/// One point at which a flux is probed: (x, t, u, s) with s = u_x.
struct FluxSample {
    double x = 0.0;
    double t = 0.0;
    double u = 0.0;
    double s = 0.0;
};

/// Nonlinearity A(x, t, u, u_x) with its structure constants.
///
/// The structure condition asks A s >= C_o |s|^p and |A| <= C_1 |s|^{p-1}.
struct FluxModel {
    double p = 1.5;
    double C_o = 1.0;
    double C_1 = 1.0;
    std::function<double(double x, double t, double u, double s)> evaluate;

    /// |s|^{p-2} s with C_o = C_1 = 1; zero at s = 0.
    static FluxModel prototype(double p);
};

/// |s|^{p-2} s, continuous at s = 0 since p > 1.
double prototype_flux(double s, double p);

double flux_eval(const FluxModel& model, double x, double t, double u, double s);

/// Samples the two structure inequalities. Details hold the worst
/// coercivity margin (A s - C_o|s|^p) and growth margin (C_1|s|^{p-1} - |A|).
CheckReport check_structure(const FluxModel& model, std::span<const FluxSample> samples);

/// Discrete p-Dirichlet energy sum_cells (1/p) |du/h|^p h.
double p_energy(const Field& field, const Grid& grid, double p);

}  // namespace harnack
