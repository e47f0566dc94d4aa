#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "harnack/config.hpp"
#include "harnack/constants.hpp"
#include "harnack/report.hpp"
#include "harnack/solver.hpp"

namespace harnack {

/// One line of results.csv.
struct ResultRow {
    std::string name;
    double p = 0.0;
    double M = 0.0;
    /// NaN when the check does not depend on rho.
    double rho_over_rhobar = 0.0;
    CheckReport report;
    std::string chain_key;
};

/// Exit-code contract of `run`.
enum class ExitCode : int { ok = 0, check_failed = 1, config_error = 2, solver_failure = 3 };

struct RunResult {
    ExitCode code = ExitCode::ok;
    std::vector<ResultRow> rows;
    std::map<std::string, ConstantChain> chains;
    std::vector<std::string> errors;
};

/// Fixed header of results.csv.
inline constexpr const char* kResultsHeader =
    "name,p,rho_over_rhobar,passed,margin,sigma_emp,exponent_fit";

/// Renders rows as results.csv (17 significant digits, empty cells for n/a).
std::string results_csv(const std::vector<ResultRow>& rows);

/// Scenario trajectory for one (p, M) cell of the sweep.
struct CellSetup {
    Params params;
    Grid grid;
    BoundarySpec bc;
    Field u0;
    double t_end = 0.0;
};
CellSetup build_cell(const ExperimentConfig& config, double p, double M, double t_end);

/// Executes every (scenario x sweep x check) cell. Writes results.csv,
/// manifest.json and the requested SVG plots into config.output_dir.
/// Worker count: HARNACK_LAB_THREADS, else hardware concurrency.
RunResult run_experiment(const ExperimentConfig& config);

/// Loads the config file and runs it. Config errors are reported through
/// the manifest in the configured (or default) output directory.
RunResult run(const std::filesystem::path& config_path);

}  // namespace harnack
