#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "flock/cli/config.hpp"
#include "flock/dynamics.hpp"
#include "flock/monitor.hpp"

namespace flock::cli {

enum ExitCode : int
{
    kExitClean = 0,
    kExitFailure = 1,
    kExitBoundViolation = 2,
    kExitConfigError = 64,
};

struct RunSummary
{
    ControlLawKind law = ControlLawKind::Proposed;
    bool completed = false;
    std::optional<ViolationReport> violation;
    std::optional<double> convergence_time;  // first step with dispersion below threshold
    std::optional<double> settled_time;      // dispersion below threshold from here to the end
    double final_time = 0.0;
    double final_avg_distance = 0.0;
    double min_sq_dist = 0.0;
    double max_sq_dist = 0.0;
    double min_avg_distance = 0.0;
    double max_avg_distance = 0.0;
    MonitorReport monitor;
};

RunSummary summarize(const RunResult& result, const ScenarioSpec& spec,
                     const MonitorTolerances& tol = {});

nlohmann::ordered_json to_json(const RunSummary& s);

struct Execution
{
    std::vector<RunSummary> summaries;
    int exit_code = kExitClean;
};

/// Runs every law selected by the config (concurrently when there are
/// several) and writes, under output_dir:
///   <law>/trajectory.csv, <law>/diagnostics.csv, <law>/summary.json
///   summary.json                (all runs)
///   avg_distance.csv            (only when more than one law ran)
Execution execute(const RunConfig& config);

}  // namespace flock::cli
