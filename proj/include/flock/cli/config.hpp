#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flock/dynamics.hpp"
#include "flock/monitor.hpp"

namespace flock::cli {

enum class ScenarioKind
{
    Leaderless3,
    LeaderFollower2,
    Custom,
};

std::string_view to_string(ScenarioKind k);

struct RunConfig
{
    ScenarioKind scenario = ScenarioKind::Leaderless3;
    std::string preset = "simulation";
    /// Empty means every law ("all").
    std::optional<ControlLawKind> law = ControlLawKind::Proposed;
    /// Fully resolved scenario; `spec.law` is overwritten per run.
    ScenarioSpec spec;
    MonitorTolerances tolerances;
    std::filesystem::path output_dir = "out";
    std::vector<std::string> warnings;

    std::vector<ControlLawKind> laws() const;
};

using KeyValue = std::pair<std::string, std::string>;

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
std::vector<KeyValue> parse_key_values(std::istream& in, const std::string& source = "config");

/// Parses a single `key=value` argument as given to --set.
KeyValue parse_assignment(const std::string& text);

/// Where configuration comes from, lowest precedence first: the config file,
/// then --set assignments, then the dedicated flags.
struct ConfigSources
{
    std::optional<std::filesystem::path> config_file;
    std::vector<std::string> assignments;
    std::optional<std::string> scenario;
    std::optional<std::string> law;
    std::optional<double> dt;
    std::optional<double> duration;
    std::optional<std::filesystem::path> output_dir;
};

/// Resolves defaults, applies every source in order and validates the result.
/// Throws ConfigError naming the offending key.
RunConfig load_config(const ConfigSources& sources);

/// Same, from an already collected list of assignments.
RunConfig load_config(const std::vector<KeyValue>& entries);

}  // namespace flock::cli
