#include "harnack/cutoff.hpp"

#include <cmath>

#include "harnack/errors.hpp"

namespace harnack {

Cutoff::Cutoff(double y, double rho, double t0, double T) : y_(y), rho_(rho), t0_(t0), T_(T) {
    if (!(rho > 0.0) || !(T > 0.0)) throw InvalidInput("cutoff needs rho > 0 and T > 0");
}

double Cutoff::zeta1(double x) const {
    const double d = std::abs(x - y_);
    if (d <= 0.5 * rho_) return 1.0;
    if (d >= rho_) return 0.0;
    return 2.0 * (rho_ - d) / rho_;
}

double Cutoff::dzeta1(double x) const {
    const double d = x - y_;
    const double a = std::abs(d);
    if (a <= 0.5 * rho_ || a >= rho_) return 0.0;
    return d > 0.0 ? -2.0 / rho_ : 2.0 / rho_;
}

double Cutoff::zeta2(double t) const {
    const double s = t - t0_;
    if (s <= 0.5 * T_) return 1.0;
    if (s >= T_) return 0.0;
    return 2.0 * (T_ - s) / T_;
}

double Cutoff::dzeta2(double t) const {
    const double s = t - t0_;
    if (s <= 0.5 * T_ || s >= T_) return 0.0;
    return -2.0 / T_;
}

}  // namespace harnack
