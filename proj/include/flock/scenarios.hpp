#pragma once

#include "flock/dynamics.hpp"

namespace flock {

// Simulation parameters: sigma=1, beta=0.5, theta=2, K=1, d0=1, d1=2.25.
ControlParams simulation_params();

// Flight-test parameters: d0=1, d1=8, K=1, sigma=1, beta=0.25.
ControlParams flight_params();

// Three agents initially heading towards their common centre.
ScenarioSpec leaderless3(ControlLawKind law = ControlLawKind::Proposed);

// Scripted leader (agent 0) and one follower. `flight_preset` swaps in
// flight_params().
ScenarioSpec leader_follower2(ControlLawKind law = ControlLawKind::Proposed,
                              bool flight_preset = false);

}  // namespace flock
