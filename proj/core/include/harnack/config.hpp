#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harnack/types.hpp"

namespace harnack {

enum class ScenarioKind { barenblatt, pinned, custom };

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::pinned;
    /// Barenblatt profile constant and time shift.
    double C = 1.0;
    double t0 = 1.0;
    /// Pinned value at y; 0 means 2 M.
    double pin_value = 0.0;
    /// Initial data away from the pin: "zero" or "random" (seeded bumps).
    std::string u0 = "zero";
    /// custom: CSV with columns x,u interpolated onto the grid.
    std::string u0_table;
    /// When > 0 the domain becomes y +- factor * rho_bar for every cell.
    double domain_halfwidth_rhobar = 0.0;

    bool operator==(const ScenarioSpec&) const = default;
};

struct ChainSpec {
    double nu = 0.25;
    double gamma1 = 2.0;
    /// Unset: the calibrated default_delta(p).
    std::optional<double> delta;
    double c = 4.0;

    bool operator==(const ChainSpec&) const = default;
};

struct SweepSpec {
    std::vector<double> p;
    std::vector<double> rho_over_rhobar{4.0, 8.0, 16.0};
    std::vector<double> M;

    bool operator==(const SweepSpec&) const = default;
};

/// Everything one `run` needs.
///
/// Text format: one `key = value` per line, `#` starts a comment, sections
/// are dotted prefixes (`params.p`, `scenario.kind`, `check.energy.a`).
/// Lists are written `[a, b, c]`. A JSON object with the same keys (nested
/// objects flatten to dotted keys) is accepted too.
struct ExperimentConfig {
    Params params;
    ScenarioSpec scenario;
    std::vector<std::string> checks;
    /// Per-check numeric overrides: check.<name>.<key> = value.
    std::map<std::string, std::map<std::string, double>> overrides;
    ChainSpec chain;
    SweepSpec sweep;
    std::vector<std::string> plots;
    std::string output_dir = "out";
    std::uint64_t seed = 1;

    bool operator==(const ExperimentConfig&) const;

    /// p values actually visited: sweep.p, or params.p when the sweep is empty.
    std::vector<double> p_values() const;
    std::vector<double> M_values() const;
    double override_or(const std::string& check, const std::string& key, double fallback) const;
};

const std::vector<std::string>& known_checks();
const std::vector<std::string>& known_plots();

ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config_json(std::string_view text);
/// Picks JSON when the first non-blank character is '{'.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config_text(to_config_text(c)) == c.
std::string to_config_text(const ExperimentConfig& config);

/// Flat key -> value-text view, the same keys as the text format.
std::map<std::string, std::string> to_flat_map(const ExperimentConfig& config);

/// Throws ConfigError naming the first invalid key.
void validate(const ExperimentConfig& config);

/// Canonical full suite: pinned scenario, p in {1.2, 1.5, 1.8},
/// rho / rho_bar in {4, 8, 16}, every check.
ExperimentConfig default_suite_config();

}  // namespace harnack
