#pragma once

namespace harnack {

/// Piecewise-linear cutoff pair used by the energy estimate.
///
/// Space: 1 on B_{rho/2}(y), linear ramps to 0 at the edge of B_rho(y),
/// so |zeta1'| = 2/rho on the ramps (gamma1 = 2).
/// Time: 1 on (t0, t0 + T/2], linear ramp to 0 at t0 + T, 0 afterwards
/// (gamma2 = 2).
class Cutoff {
public:
    Cutoff(double y, double rho, double t0, double T);

    double zeta1(double x) const;
    double dzeta1(double x) const;
    double zeta2(double t) const;
    double dzeta2(double t) const;

    double zeta(double x, double t) const { return zeta1(x) * zeta2(t); }

    double y() const noexcept { return y_; }
    double rho() const noexcept { return rho_; }
    double t0() const noexcept { return t0_; }
    double T() const noexcept { return T_; }

    static constexpr double gamma1_const = 2.0;
    static constexpr double gamma2_const = 2.0;

private:
    double y_;
    double rho_;
    double t0_;
    double T_;
};

}  // namespace harnack
