#pragma once

#include <map>
#include <optional>
#include <string>

namespace harnack {

/// Outcome of one inequality verification.
///
/// `margin` is rhs - lhs for a claim of the form lhs <= rhs (or the log
/// difference when `log_space` is set). The report passes exactly when
/// margin >= -tolerance.
struct CheckReport {
    std::string name;
    bool passed = false;
    std::optional<double> lhs;
    std::optional<double> rhs;
    bool log_space = false;
    double margin = 0.0;
    double tolerance = 0.0;
    std::map<std::string, double> details;
    std::map<std::string, std::string> notes;

    /// Builds a report for the claim lhs <= rhs.
    static CheckReport upper_bound(std::string name, double lhs, double rhs,
                                   double tolerance, bool log_space = false);
    /// Builds a report for the claim lhs >= rhs.
    static CheckReport lower_bound(std::string name, double lhs, double rhs,
                                   double tolerance, bool log_space = false);

    /// Re-derives `passed` from margin and tolerance.
    void settle() { passed = margin >= -tolerance; }

    /// `{name, passed, lhs_log?, rhs_log?, margin, details{...}}`; the lhs/rhs
    /// keys carry a `_log` suffix when the values are in log-space.
    std::string to_json() const;
};

}  // namespace harnack
