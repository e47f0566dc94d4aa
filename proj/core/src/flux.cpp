#include "harnack/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harnack/errors.hpp"

namespace harnack {

double prototype_flux(double s, double p) {
    if (s == 0.0) return 0.0;
    return std::copysign(std::pow(std::abs(s), p - 1.0), s);
}

FluxModel FluxModel::prototype(double p) {
    FluxModel m;
    m.p = p;
    m.C_o = 1.0;
    m.C_1 = 1.0;
    m.evaluate = [p](double, double, double, double s) { return prototype_flux(s, p); };
    return m;
}

double flux_eval(const FluxModel& model, double x, double t, double u, double s) {
    if (!std::isfinite(x) || !std::isfinite(t) || !std::isfinite(u) || !std::isfinite(s)) {
        throw InvalidInput("flux_eval: non-finite input");
    }
    if (!model.evaluate || !(model.p > 1.0 && model.p < 2.0)) {
        throw InvalidInput("flux_eval: flux model is not valid");
    }
    return model.evaluate(x, t, u, s);
}

CheckReport check_structure(const FluxModel& model, std::span<const FluxSample> samples) {
    if (samples.empty()) throw InvalidInput("check_structure: empty sample list");
    if (!(model.C_o > 0.0) || !(model.C_1 > 0.0)) {
        throw InvalidInput("check_structure: structure constants must be positive");
    }
    double worst_coercive = std::numeric_limits<double>::infinity();
    double worst_growth = std::numeric_limits<double>::infinity();
    const double p = model.p;
    for (const auto& smp : samples) {
        const double a = flux_eval(model, smp.x, smp.t, smp.u, smp.s);
        const double abs_s = std::abs(smp.s);
        // Both sides are evaluated through the same power so that the
        // prototype yields margins that are zero to the last bit.
        const double sp1 = abs_s == 0.0 ? 0.0 : std::pow(abs_s, p - 1.0);
        worst_coercive = std::min(worst_coercive, a * smp.s - model.C_o * sp1 * abs_s);
        worst_growth = std::min(worst_growth, model.C_1 * sp1 - std::abs(a));
    }
    const double worst = std::min(worst_coercive, worst_growth);
    CheckReport r = CheckReport::lower_bound("structure", worst, 0.0, 0.0);
    r.details["coercivity_margin"] = worst_coercive;
    r.details["growth_margin"] = worst_growth;
    r.details["samples"] = static_cast<double>(samples.size());
    r.details["C_o"] = model.C_o;
    r.details["C_1"] = model.C_1;
    return r;
}

double p_energy(const Field& field, const Grid& grid, double p) {
    field.validate(grid);
    const auto& u = field.values;
    const double h = grid.h();
    double e = 0.0;
    for (std::size_t c = 0; c + 1 < u.size(); ++c) {
        e += std::pow(std::abs((u[c + 1] - u[c]) / h), p) * h;
    }
    return e / p;
}

}  // namespace harnack
