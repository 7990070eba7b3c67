#include "flock/scenarios.hpp"

namespace flock {

ControlParams simulation_params()
{
    ControlParams p;
    p.sigma = 1.0;
    p.beta = 0.5;
    p.theta = 2;
    p.K = 1.0;
    p.d0 = 1.0;
    p.d1 = 2.25;
    p.delta = 1e-6;
    return p;
}

ControlParams flight_params()
{
    ControlParams p = simulation_params();
    p.beta = 0.25;
    p.d1 = 8.0;
    return p;
}

ScenarioSpec leaderless3(ControlLawKind law)
{
    ScenarioSpec s;
    s.law = law;
    s.params = simulation_params();
    s.initial = {
        {{0.0, 0.0}, 45.0, 0.54},
        {{1.25, 0.0}, 135.0, 0.42},
        {{0.63, 1.08}, 270.0, 0.99},
    };
    return s;
}

ScenarioSpec leader_follower2(ControlLawKind law, bool flight_preset)
{
    ScenarioSpec s;
    s.law = law;
    s.params = flight_preset ? flight_params() : simulation_params();
    s.initial = {
        {{0.0, 1.32}, 118.0, 0.88},
        {{0.0, 0.0}, 92.0, 0.50},
    };
    s.leader = LeaderScript{};
    return s;
}

}  // namespace flock
