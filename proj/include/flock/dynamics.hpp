#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flock/diagnostics.hpp"
#include "flock/types.hpp"
#include "flock/vec.hpp"

namespace flock {

enum class IntegrationScheme
{
    Euler,
    RK4,
};

std::string_view to_string(IntegrationScheme s);
std::optional<IntegrationScheme> parse_scheme(std::string_view name);

struct IntegratorConfig
{
    IntegrationScheme scheme = IntegrationScheme::RK4;
    double dt = 0.01;         // s
    double duration = 250.0;  // s

    std::size_t steps() const;
};

/// Scripted leader acceleration: amplitude * (sin(pi t/180), cos(pi t/180))
/// before switch_time, the negated pair from switch_time on.
struct LeaderScript
{
    double switch_time = 125.0;  // s
    double amplitude = 1.0;      // m/s^2
};

/// Discrete Vicsek baseline. All followers move at the mean of the initial
/// speeds; every `update_interval` seconds each one takes the average heading
/// of the agents within `radius` (itself included). No noise.
struct VicsekConfig
{
    double radius = 1.5;           // m
    double update_interval = 1.0;  // s
};

struct InitialAgent
{
    Vec2 position;           // m
    double orientation_deg;  // counterclockwise from +x
    double speed;            // m/s
};

struct ScenarioSpec
{
    ControlLawKind law = ControlLawKind::Proposed;
    ControlParams params;
    SaturationLimits limits;
    std::vector<InitialAgent> initial;
    /// When set, agent 0 follows the script and ignores its flockmates.
    std::optional<LeaderScript> leader;
    IntegratorConfig integrator;
    VicsekConfig vicsek;
};

/// Throws ConfigError on any invalid field, including initial pairs whose
/// squared distance is not strictly inside (d0, d1). Returns warnings.
std::vector<std::string> validate(const ScenarioSpec& spec);

FlockState initial_state(const ScenarioSpec& spec);

Vec2 polar_to_velocity(double orientation_deg, double speed);

Vec2 leader_input(double t, const LeaderScript& script);

/// Scales u down to norm a_max, keeping its direction.
Vec2 saturate_acceleration(const Vec2& u, const SaturationLimits& limits);
/// Scales v down to norm v_max, keeping its direction.
Vec2 clamp_velocity(const Vec2& v, const SaturationLimits& limits);

/// Accelerations of all agents at `flock` for a continuous-time law: the
/// leader (if any) takes its script, the rest the configured law, saturated
/// when limits are enabled.
std::vector<Vec2> accelerations(const FlockState& flock, const ScenarioSpec& spec);

/// Guard band kept inside (d0, d1) when checking states produced by a step.
inline constexpr double kGuardBand = 1e-9;

/// Advances the flock by one integrator step. Throws DistanceBoundViolation
/// (with time and pair) when a bound the law enforces is reached.
FlockState step(const FlockState& flock, const ScenarioSpec& spec);

struct TrajectorySample
{
    FlockState state;
    std::vector<Vec2> inputs;  // per-agent acceleration at `state`
    DiagnosticsRecord diagnostics;
};

struct Trajectory
{
    double dt = 0.0;
    std::vector<TrajectorySample> samples;
};

struct ViolationReport
{
    double time = 0.0;
    std::size_t first = 0;
    std::size_t second = 0;
    Bound bound = Bound::Lower;
    double sq_dist = 0.0;
    /// True when the law has a kernel at that bound and the run stopped.
    bool halted = false;
};

struct RunResult
{
    Trajectory trajectory;
    std::optional<ViolationReport> violation;  // the first one observed
    bool completed = false;                    // reached the full horizon
};

/// Integrates the scenario over the full horizon. Laws with a kernel at a
/// crossed bound halt there; laws without one keep going and only the first
/// crossing is reported.
RunResult run(const ScenarioSpec& spec);

}  // namespace flock
